#pragma once

#include <cstdint>
#include <string>

#include "bsk/element.hpp"
#include "bsk/rep.hpp"

namespace bsk {

/// Equality verdict of the bounded verifier. "equal_on_box" certifies that
/// both sides act identically on every monomial of the box; it is evidence of
/// equality, and a complete refuter for inequality witnessed on the box.
struct OracleVerdict {
    bool equal = false;
    bool refuted_modular = false;  // set when a modular trial found the witness
    ExpVec witness;                // monomial where the difference acts nonzero
    std::string witness_image;     // exact image polynomial (empty if modular)

    std::string to_string() const;
};

struct OracleOptions {
    int box_radius = 2;
    int modular_trials = 3;
    std::uint64_t prime = 2147483647ULL;  // needs prime > 2^20
    std::uint64_t seed = 1;
};

/// Two-tier equality: k modular specializations as a fast refuter, then exact
/// symbolic application of the difference to every box monomial.
OracleVerdict oracle_equal(const Element& a, const Element& b, const RepConvention& conv,
                           const OracleOptions& opts = {});

/// Difference form used by the suites.
OracleVerdict oracle_is_zero(const Element& e, const RepConvention& conv,
                             const OracleOptions& opts = {});

}  // namespace bsk
