#include "bsk/daha_ops.hpp"

namespace bsk {

SubstImages tau_images(TauGen g, int n) {
    SubstImages s = identity_images(n);
    switch (g) {
        case TauGen::tau1: s.images[kY1] = Word(n, {kY1, kX1}); break;
        case TauGen::tau1_inv: s.images[kY1] = Word(n, {kY1, static_cast<Letter>(-kX1)}); break;
        case TauGen::tau2: s.images[kX1] = Word(n, {kX1, kY1}); break;
        case TauGen::tau2_inv: s.images[kX1] = Word(n, {kX1, static_cast<Letter>(-kY1)}); break;
    }
    return s;
}

Element tau_apply(TauGen g, const Element& e) { return substitute(e, tau_images(g, e.strands())); }

Element tau_apply_path(const std::vector<TauGen>& path, const Element& e) {
    Element r = e;
    for (auto it = path.rbegin(); it != path.rend(); ++it) r = tau_apply(*it, r);
    return r;
}

namespace {

Element power_sum(XY which, int m, int n) {
    if (m == 0) throw std::invalid_argument("power_sum: zero exponent");
    Element sum(n);
    for (int i = 1; i <= n; ++i) {
        Word gi = gen_xy(i, which, n);
        if (m < 0) gi = gi.inverse();
        Word w(n);
        for (int k = 0; k < (m > 0 ? m : -m); ++k) w = w * gi;
        sum += Element(w);
    }
    return sum;
}

}  // namespace

Element power_sum_y(int m, int n) { return power_sum(XY::y, m, n); }
Element power_sum_x(int m, int n) { return power_sum(XY::x, m, n); }

Element qtilde_via_path(const Vec2& x, int n, const std::vector<TauGen>& path) {
    const long m = d_of(x);
    if (m == 0) throw std::invalid_argument("qtilde: zero vector");
    return tau_apply_path(path, power_sum_y(static_cast<int>(m), n));
}

QPair q_elements(const Vec2& x, int n) {
    if (x.is_zero()) throw std::invalid_argument("q_elements: zero vector");
    if (n < 2) throw std::invalid_argument("q_elements: rank must be at least 2");
    QPair out;
    out.qtilde = qtilde_via_path(x, n, sl2_path(x));
    Element en = to_element(symmetrizer(n).e_n);
    out.q = en * out.qtilde * en;
    return out;
}

RatFunc s_power_bracket(int m) {
    return RatFunc::monomial(1, m, 0) - RatFunc::monomial(1, -m, 0);
}

Element w_element(const Vec2& x, int n, WMode mode) {
    if (x.is_zero()) throw std::invalid_argument("w_element: zero vector");
    const int m = static_cast<int>(d_of(x));
    const RatFunc bracket = s_power_bracket(m);
    if (mode == WMode::general) {
        return q_elements(x, n).qtilde.scaled(bracket / q_pow_minus_one(m));
    }
    const RatFunc one(1);
    const RatFunc c2m = RatFunc::monomial(1, 0, 2 * m);     // c^{2m}
    const RatFunc cm2m = RatFunc::monomial(1, 0, -2 * m);   // c^{-2m}
    if (x.b == 0 && x.a > 0) return power_sum_x(m, n).scaled(bracket / (one - c2m));
    if (x.b == 0 && x.a < 0) return power_sum_x(-m, n).scaled(bracket / (cm2m - one));
    if (x.a == 0 && x.b > 0) return power_sum_y(m, n).scaled(bracket / (cm2m - one));
    if (x.a == 0 && x.b < 0) return power_sum_y(-m, n).scaled(bracket / (one - c2m));
    throw std::invalid_argument("w_element: axis mode needs x on a coordinate axis");
}

}  // namespace bsk
