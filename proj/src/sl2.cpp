#include "bsk/sl2.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bsk {

std::string Vec2::to_string() const {
    std::ostringstream os;
    os << "(" << a << "," << b << ")";
    return os.str();
}

long d_of(const Vec2& x) { return std::gcd(x.a < 0 ? -x.a : x.a, x.b < 0 ? -x.b : x.b); }

bool is_primitive(const Vec2& x) { return d_of(x) == 1; }

long det2(const Vec2& x, const Vec2& y) { return x.a * y.b - y.a * x.b; }

bool collinear(const Vec2& x, const Vec2& y) { return det2(x, y) == 0; }

Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r;
    r.m = {x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
           x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]};
    return r;
}

Vec2 Mat2::apply(const Vec2& v) const { return {m[0] * v.a + m[1] * v.b, m[2] * v.a + m[3] * v.b}; }

Mat2 tau_matrix(TauGen g) {
    switch (g) {
        case TauGen::tau1: return Mat2{{1, 1, 0, 1}};
        case TauGen::tau1_inv: return Mat2{{1, -1, 0, 1}};
        case TauGen::tau2: return Mat2{{1, 0, 1, 1}};
        case TauGen::tau2_inv: return Mat2{{1, 0, -1, 1}};
    }
    throw std::logic_error("tau_matrix");
}

Mat2 path_matrix(const std::vector<TauGen>& path) {
    Mat2 m = Mat2::identity();
    for (TauGen g : path) m = m * tau_matrix(g);
    return m;
}

namespace {

void append_pow(std::vector<TauGen>& path, TauGen g, long count) {
    for (long k = 0; k < count; ++k) path.push_back(g);
}

const std::vector<TauGen> kQuarterTurn = {TauGen::tau1, TauGen::tau2_inv, TauGen::tau1};

}  // namespace

std::vector<TauGen> sl2_path(const Vec2& x) {
    if (x.is_zero()) throw std::invalid_argument("sl2_path: zero vector");
    const long m = d_of(x);
    Vec2 v{x.a / m, x.b / m};
    // Invariant: x/m = (matrix of path) * v. Reduce v to (0, 1) by Euclid,
    // appending the letters that were peeled off on the right.
    std::vector<TauGen> path;
    while (v.a != 0) {
        if (v.b == 0) {
            // v = (+-1, 0); one quarter turn maps (0, +-1) to (+-1, 0).
            path.insert(path.end(), kQuarterTurn.begin(), kQuarterTurn.end());
            v = {-v.b, v.a};  // inverse quarter turn
            continue;
        }
        long t = v.a / v.b;  // truncated
        if (t != 0) {
            append_pow(path, t > 0 ? TauGen::tau1 : TauGen::tau1_inv, t > 0 ? t : -t);
            v.a -= t * v.b;
            continue;
        }
        long u = v.b / v.a;
        append_pow(path, u > 0 ? TauGen::tau2 : TauGen::tau2_inv, u > 0 ? u : -u);
        v.b -= u * v.a;
    }
    if (v.b < 0) {
        // half turn: (tau1 tau2^{-1} tau1)^2 = -I maps (0,1) to (0,-1)
        path.insert(path.end(), kQuarterTurn.begin(), kQuarterTurn.end());
        path.insert(path.end(), kQuarterTurn.begin(), kQuarterTurn.end());
        v = {-v.a, -v.b};
    }
    // Sanity: the constructed word must carry (0, m) to x.
    if (!(path_matrix(path).apply(Vec2{0, m}) == x))
        throw std::logic_error("sl2_path: reduction produced an invalid word");
    return path;
}

std::vector<TauGen> sl2_path_alternative(const Vec2& x) {
    // Prepend the full boundary twist (t1 t2^{-1} t1)^4. Its matrix is the
    // identity, so the word stays valid, but as an algebra automorphism it is
    // conjugation by the full twist braid, which is exactly the ambiguity the
    // well-definedness checks must quotient out.
    std::vector<TauGen> path;
    for (int k = 0; k < 4; ++k) path.insert(path.end(), kQuarterTurn.begin(), kQuarterTurn.end());
    std::vector<TauGen> rest = sl2_path(x);
    path.insert(path.end(), rest.begin(), rest.end());
    if (!(path_matrix(path).apply(Vec2{0, d_of(x)}) == x))
        throw std::logic_error("sl2_path_alternative: invalid word");
    return path;
}

std::string path_to_string(const std::vector<TauGen>& path) {
    if (path.empty()) return "id";
    std::ostringstream os;
    bool first = true;
    for (TauGen g : path) {
        if (!first) os << " ";
        first = false;
        switch (g) {
            case TauGen::tau1: os << "t1"; break;
            case TauGen::tau1_inv: os << "t1^-1"; break;
            case TauGen::tau2: os << "t2"; break;
            case TauGen::tau2_inv: os << "t2^-1"; break;
        }
    }
    return os.str();
}

}  // namespace bsk
