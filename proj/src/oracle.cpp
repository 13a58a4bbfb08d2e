#include "bsk/oracle.hpp"

#include <random>
#include <sstream>

namespace bsk {

std::string OracleVerdict::to_string() const {
    if (equal) return "equal_on_box";
    std::ostringstream os;
    os << "distinct at X^(";
    for (size_t i = 0; i < witness.size(); ++i) {
        if (i) os << ",";
        os << witness[i];
    }
    os << ")";
    if (refuted_modular) os << " [modular]";
    if (!witness_image.empty()) os << " image " << witness_image;
    return os.str();
}

OracleVerdict oracle_is_zero(const Element& e, const RepConvention& conv,
                             const OracleOptions& opts) {
    OracleVerdict verdict;
    if (e.is_zero()) {
        verdict.equal = true;
        return verdict;
    }
    const int n = e.strands();
    auto monos = box_monomials(n, opts.box_radius);

    // Tier 1: modular specializations, a fast refuter only. A nonzero image at
    // a point where every denominator is defined proves the exact difference
    // is nonzero; zero images prove nothing.
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, opts.prime - 1);
    for (int trial = 0; trial < opts.modular_trials; ++trial) {
        for (int attempt = 0; attempt < 16; ++attempt) {
            std::uint64_t s0 = dist(rng);
            std::uint64_t c0 = dist(rng);
            try {
                auto rep = modular_rep(n, conv, s0, c0, opts.prime);
                for (const auto& ev : monos) {
                    auto img = rep.apply_element(e, rep.monomial(ev));
                    if (!img.is_zero()) {
                        verdict.equal = false;
                        verdict.refuted_modular = true;
                        verdict.witness = ev;
                        return verdict;
                    }
                }
            } catch (const BadModularPoint&) {
                continue;  // resample the point
            }
            break;
        }
    }

    // Tier 2: exact verdict.
    auto rep = exact_rep(n, conv);
    for (const auto& ev : monos) {
        auto img = rep.apply_element(e, rep.monomial(ev));
        if (!img.is_zero()) {
            verdict.equal = false;
            verdict.witness = ev;
            verdict.witness_image = laurent_to_string(img);
            return verdict;
        }
    }
    verdict.equal = true;
    return verdict;
}

OracleVerdict oracle_equal(const Element& a, const Element& b, const RepConvention& conv,
                           const OracleOptions& opts) {
    if (a.strands() != b.strands())
        throw std::invalid_argument("oracle_equal: strand count mismatch");
    return oracle_is_zero(a - b, conv, opts);
}

}  // namespace bsk
