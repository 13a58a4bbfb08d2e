#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bsk/bipoly.hpp"

namespace bsk {

/// Retriable failure of a modular specialization: the sampled point makes a
/// denominator vanish, so the caller should resample.
struct BadModularPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of the field Q(s, c), kept in canonical form:
///   - gcd(num, den) = 1,
///   - den != 0 with deglex-leading coefficient 1,
///   - zero is 0/1.
/// Canonical form makes value equality coincide with structural equality.
class RatFunc {
  public:
    RatFunc() : num_(), den_(BiPoly::one()) {}
    RatFunc(long v) : num_(v), den_(BiPoly::one()) {}
    explicit RatFunc(const Rat& v) : num_(v), den_(BiPoly::one()) {}
    explicit RatFunc(BiPoly p) : num_(std::move(p)), den_(BiPoly::one()) {}
    RatFunc(BiPoly num, BiPoly den);

    static RatFunc gen_s() { return RatFunc(BiPoly::gen_s()); }
    static RatFunc gen_c() { return RatFunc(BiPoly::gen_c()); }
    /// Laurent monomial r * s^es * c^ec with es, ec of either sign.
    static RatFunc monomial(const Rat& r, int es, int ec);

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    RatFunc inv() const;
    RatFunc pow(long e) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    bool operator<(const RatFunc&) const = delete;

    /// Value at (s, c) = (sv, cv) in F_p. Throws BadModularPoint when the
    /// denominator vanishes at the point; std::domain_error on a bad prime.
    std::uint64_t eval_mod(std::uint64_t sv, std::uint64_t cv, std::uint64_t p) const;

    /// Reduced-fraction rendering, e.g. "(s^2 - 1)/(s)"; plain numerator when
    /// the denominator is 1.
    std::string to_string() const;

  private:
    void normalize();

    BiPoly num_;
    BiPoly den_;
};

/// Named parameters of the algebras, translated into Q(s, c):
///   t = s^2, t_half = s, q = c^-2, sigma = c^2, sigma_bar = s^-2.
enum class Param { t, q, sigma, sigma_bar, t_half };
RatFunc rf_param(Param p);

/// q^k - 1 and 1 - c^(2m) style helpers used by the W/Q normalizations.
RatFunc q_pow_minus_one(int k);

}  // namespace bsk
