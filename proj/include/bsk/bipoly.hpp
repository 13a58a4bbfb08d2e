#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace bsk {

using Rat = mpq_class;

/// Exponent pair of a monomial s^es * c^ec; both exponents are >= 0.
/// Negative powers live in RatFunc denominators, never here.
struct Exp2 {
    int es = 0;
    int ec = 0;

    friend bool operator==(const Exp2&, const Exp2&) = default;
    friend auto operator<=>(const Exp2&, const Exp2&) = default;

    int total() const { return es + ec; }
};

/// Degree-lexicographic order with s weighted before c; used for leading
/// terms and for rendering.
inline bool deglex_less(const Exp2& a, const Exp2& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    if (a.es != b.es) return a.es < b.es;
    return a.ec < b.ec;
}

/// Polynomial in Z[s, c] with rational coefficients, stored as a sorted
/// term map. Zero coefficients are never stored, so equal polynomials
/// have identical term maps.
class BiPoly {
  public:
    using TermMap = std::map<Exp2, Rat>;

    BiPoly() = default;
    explicit BiPoly(const Rat& constant) {
        if (constant != 0) terms_[Exp2{}] = constant;
    }
    explicit BiPoly(long constant) : BiPoly(Rat(constant)) {}

    static BiPoly monomial(const Rat& coeff, int es, int ec) {
        BiPoly p;
        if (es < 0 || ec < 0) throw std::invalid_argument("BiPoly: negative exponent");
        if (coeff != 0) p.terms_[Exp2{es, ec}] = coeff;
        return p;
    }
    static BiPoly gen_s() { return monomial(1, 1, 0); }
    static BiPoly gen_c() { return monomial(1, 0, 1); }
    static BiPoly one() { return BiPoly(Rat(1)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }

    /// Leading exponent in deglex order; polynomial must be nonzero.
    Exp2 leading_exp() const;
    const Rat& leading_coeff() const;

    int deg_s() const;
    int deg_c() const;

    void add_term(const Exp2& e, const Rat& coeff);

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    BiPoly scaled(const Rat& r) const;
    /// Multiply all exponents by (es, ec) shift.
    BiPoly shifted(int es, int ec) const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    /// Exact quotient; throws std::logic_error when the division is not exact.
    friend BiPoly divexact(const BiPoly& a, const BiPoly& b);

    /// Gcd normalized so the deglex-leading coefficient is 1.
    friend BiPoly poly_gcd(const BiPoly& a, const BiPoly& b);

    /// Evaluate modulo a prime at s = sv, c = cv. Throws std::domain_error if a
    /// coefficient denominator vanishes mod p (a bad prime, not a bad point).
    unsigned long eval_mod(unsigned long sv, unsigned long cv, unsigned long p) const;

    std::string to_string() const;

  private:
    TermMap terms_;
};

}  // namespace bsk
