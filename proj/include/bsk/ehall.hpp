#pragma once

#include <map>
#include <vector>

#include "bsk/daha_ops.hpp"
#include "bsk/element.hpp"
#include "bsk/sl2.hpp"

namespace bsk {

/// Q(s,c)-linear combination of ordered words in the generators u_x, x in Z^2.
/// No relations are applied structurally; relation instances are asserted
/// through the operator oracle after transport.
class EhaElement {
  public:
    using UWord = std::vector<Vec2>;

    EhaElement() = default;
    static EhaElement unit(RatFunc coeff = RatFunc(1)) {
        EhaElement e;
        e.add(UWord{}, coeff);
        return e;
    }
    static EhaElement gen(const Vec2& x, RatFunc coeff = RatFunc(1)) {
        EhaElement e;
        e.add(UWord{x}, coeff);
        return e;
    }

    const std::map<UWord, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const UWord& w, const RatFunc& coeff);
    EhaElement operator-() const;
    EhaElement& operator+=(const EhaElement& o);
    EhaElement& operator-=(const EhaElement& o);
    friend EhaElement operator+(EhaElement a, const EhaElement& b) { return a += b; }
    friend EhaElement operator-(EhaElement a, const EhaElement& b) { return a -= b; }
    friend EhaElement operator*(const EhaElement& a, const EhaElement& b);
    EhaElement scaled(const RatFunc& r) const;

    friend bool operator==(const EhaElement& a, const EhaElement& b) {
        return a.terms_ == b.terms_;
    }

    std::string to_string() const;  // "coeff * u(a,b) u(c,d) + ..."

  private:
    std::map<UWord, RatFunc> terms_;
};

/// The structure constant (1 - sigma^i)(1 - sigma_bar^i)(1 - (sigma sigma_bar)^{-i}) / i
/// with sigma = c^2, sigma_bar = s^{-2}.
RatFunc eha_alpha(int i);

/// Polynomial in the commuting generators u_{x0}, u_{2 x0}, .., u_{N x0} along
/// a primitive direction; exponent vector index k-1 is the power of u_{k x0}.
struct UPoly {
    std::map<std::vector<int>, RatFunc> terms;

    static UPoly unit(RatFunc coeff = RatFunc(1));
    static UPoly gen(int j, int order);  // u_{j x0} inside a length-`order` exponent window
    void add(const std::vector<int>& e, const RatFunc& coeff);
    UPoly& operator+=(const UPoly& o);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly scaled(const RatFunc& r) const;
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const UPoly&, const UPoly&) = default;

    EhaElement to_eha(const Vec2& x0) const;
};

/// Coefficients theta_{i x0}, i = 0..N, of exp(sum_{i>=1} alpha_i u_{i x0} z^i).
std::vector<UPoly> theta_series(const Vec2& x0, int N);
/// Same coefficients from the logarithmic-derivative recursion
/// i theta_i = sum_{j=1..i} j alpha_j u_j theta_{i-j}; the independent route.
std::vector<UPoly> theta_series_recursive(const Vec2& x0, int N);

/// Interior lattice point count of the triangle (0, x, x+y) via Pick's
/// theorem, and the brute-force enumeration cross-check.
long triangle_interior_pick(const Vec2& x, const Vec2& y);
long triangle_interior_enumerate(const Vec2& x, const Vec2& y);

/// True iff x is primitive and the triangle (0, x, x+y) has no interior
/// lattice points. Throws on collinear input.
bool triangle_check(const Vec2& x, const Vec2& y);

/// [u_y, u_x]: zero for collinear arguments; otherwise requires
/// triangle_check(x, y) and returns eps_{x,y} theta_{x+y} / alpha_1 with
/// eps_{x,y} = sign(det(x y)).
EhaElement hall_bracket(const Vec2& y, const Vec2& x);

/// Transport into the braid algebra: u_x -> Q_x / (q^{d(x)} - 1), extended to
/// words by elem_mul and linearly to sums.
Element phi_n(const EhaElement& e, int n);

}  // namespace bsk
