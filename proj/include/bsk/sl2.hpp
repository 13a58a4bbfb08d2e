#pragma once

#include <array>
#include <string>
#include <vector>

namespace bsk {

/// Lattice vector in Z^2 indexing curves and Hall-algebra generators.
struct Vec2 {
    long a = 0;
    long b = 0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend auto operator<=>(const Vec2&, const Vec2&) = default;
    Vec2 operator+(const Vec2& o) const { return {a + o.a, b + o.b}; }
    Vec2 operator-() const { return {-a, -b}; }
    bool is_zero() const { return a == 0 && b == 0; }
    std::string to_string() const;
};

/// gcd of |a|, |b|; zero vector gives 0, so primitive means d(x) == 1.
long d_of(const Vec2& x);
bool is_primitive(const Vec2& x);
/// det of the matrix with columns x, y.
long det2(const Vec2& x, const Vec2& y);
bool collinear(const Vec2& x, const Vec2& y);

/// Dehn-twist generators of the SL_2(Z) action:
///   tau1 = [1 1; 0 1],  tau2 = [1 0; 1 1].
enum class TauGen { tau1, tau1_inv, tau2, tau2_inv };

struct Mat2 {
    std::array<long, 4> m{1, 0, 0, 1};  // row-major
    static Mat2 identity() { return {}; }
    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    Vec2 apply(const Vec2& v) const;
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 tau_matrix(TauGen g);
Mat2 path_matrix(const std::vector<TauGen>& path);

/// A word in tau1^{+-1}, tau2^{+-1} whose matrix product carries (0, d(x)) to
/// x, computed by a fixed Euclidean reduction, so deterministic per input.
std::vector<TauGen> sl2_path(const Vec2& x);

/// A second valid word for the same x, differing from sl2_path(x) whenever a
/// non-trivial alternative exists; used by the well-definedness checks.
std::vector<TauGen> sl2_path_alternative(const Vec2& x);

std::string path_to_string(const std::vector<TauGen>& path);

}  // namespace bsk
