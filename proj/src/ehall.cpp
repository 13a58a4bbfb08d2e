#include "bsk/ehall.hpp"

#include <algorithm>
#include <sstream>

namespace bsk {

void EhaElement::add(const UWord& w, const RatFunc& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

EhaElement EhaElement::operator-() const {
    EhaElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

EhaElement& EhaElement::operator+=(const EhaElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

EhaElement& EhaElement::operator-=(const EhaElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

EhaElement operator*(const EhaElement& a, const EhaElement& b) {
    EhaElement r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            EhaElement::UWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    return r;
}

EhaElement EhaElement::scaled(const RatFunc& r) const {
    EhaElement out;
    if (r.is_zero()) return out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * r);
    return out;
}

std::string EhaElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::ostringstream ws;
        if (w.empty()) {
            ws << "1";
        } else {
            for (size_t i = 0; i < w.size(); ++i) {
                if (i) ws << " ";
                ws << "u(" << w[i].a << "," << w[i].b << ")";
            }
        }
        if (c.is_one() && !w.empty()) os << ws.str();
        else os << c.to_string() << " * " << ws.str();
    }
    return os.str();
}

RatFunc eha_alpha(int i) {
    if (i < 1) throw std::invalid_argument("eha_alpha: index must be >= 1");
    const RatFunc one(1);
    const RatFunc sigma = rf_param(Param::sigma);
    const RatFunc sigma_bar = rf_param(Param::sigma_bar);
    RatFunc prod = (one - sigma.pow(i)) * (one - sigma_bar.pow(i)) *
                   (one - (sigma * sigma_bar).pow(-i));
    return prod / RatFunc(Rat(i));
}

UPoly UPoly::unit(RatFunc coeff) {
    UPoly p;
    p.add({}, coeff);
    return p;
}

UPoly UPoly::gen(int j, int order) {
    UPoly p;
    std::vector<int> e(order, 0);
    e[j - 1] = 1;
    p.add(e, RatFunc(1));
    return p;
}

void UPoly::add(const std::vector<int>& e, const RatFunc& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

UPoly& UPoly::operator+=(const UPoly& o) {
    for (const auto& [e, c] : o.terms) add(e, c);
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e = ea;
            if (e.size() < eb.size()) e.resize(eb.size(), 0);
            for (size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
            r.add(e, ca * cb);
        }
    return r;
}

UPoly UPoly::scaled(const RatFunc& r) const {
    UPoly out;
    if (r.is_zero()) return out;
    for (const auto& [e, c] : terms) out.terms.emplace(e, c * r);
    return out;
}

EhaElement UPoly::to_eha(const Vec2& x0) const {
    EhaElement out;
    for (const auto& [e, c] : terms) {
        EhaElement::UWord w;
        for (size_t k = 0; k < e.size(); ++k)
            for (int rep = 0; rep < e[k]; ++rep)
                w.push_back(Vec2{x0.a * static_cast<long>(k + 1), x0.b * static_cast<long>(k + 1)});
        out.add(w, c);
    }
    return out;
}

namespace {

// Truncated power series in z with UPoly coefficients, degree <= N.
using USeries = std::vector<UPoly>;

USeries series_mul(const USeries& a, const USeries& b, int N) {
    USeries r(N + 1);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j) {
            if (a[i].is_zero() || b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    return r;
}

}  // namespace

std::vector<UPoly> theta_series(const Vec2& x0, int N) {
    if (!is_primitive(x0)) throw std::invalid_argument("theta_series: direction must be primitive");
    if (N < 0) throw std::invalid_argument("theta_series: negative order");
    // A = sum_{i=1..N} alpha_i u_i z^i; exp(A) = sum A^k / k!
    USeries A(N + 1);
    for (int i = 1; i <= N; ++i) A[i] = UPoly::gen(i, N).scaled(eha_alpha(i));
    USeries result(N + 1);
    result[0] = UPoly::unit();
    USeries power(N + 1);
    power[0] = UPoly::unit();
    Rat factorial(1);
    for (int k = 1; k <= N; ++k) {
        power = series_mul(power, A, N);
        factorial *= k;
        for (int i = 0; i <= N; ++i) result[i] += power[i].scaled(RatFunc(Rat(1) / factorial));
    }
    return result;
}

std::vector<UPoly> theta_series_recursive(const Vec2& x0, int N) {
    if (!is_primitive(x0)) throw std::invalid_argument("theta_series: direction must be primitive");
    if (N < 0) throw std::invalid_argument("theta_series: negative order");
    std::vector<UPoly> theta(N + 1);
    theta[0] = UPoly::unit();
    for (int i = 1; i <= N; ++i) {
        UPoly acc;
        for (int j = 1; j <= i; ++j) {
            UPoly term = UPoly::gen(j, N).scaled(eha_alpha(j) * RatFunc(Rat(j)));
            acc += term * theta[i - j];
        }
        theta[i] = acc.scaled(RatFunc(Rat(1) / Rat(i)));
    }
    return theta;
}

long triangle_interior_pick(const Vec2& x, const Vec2& y) {
    // Pick: I = A - B/2 + 1 with 2A = |det(x y)| and B the boundary count.
    long det = det2(x, y);
    long twoA = det < 0 ? -det : det;
    Vec2 xy = x + y;
    long B = d_of(x) + d_of(y) + d_of(xy);
    // I = (2A - B + 2) / 2
    return (twoA - B + 2) / 2;
}

long triangle_interior_enumerate(const Vec2& x, const Vec2& y) {
    const Vec2 v0{0, 0}, v1 = x, v2 = x + y;
    long minx = std::min({v0.a, v1.a, v2.a}), maxx = std::max({v0.a, v1.a, v2.a});
    long miny = std::min({v0.b, v1.b, v2.b}), maxy = std::max({v0.b, v1.b, v2.b});
    long orient = det2(x, v2);  // twice the signed area
    if (orient == 0) throw std::invalid_argument("degenerate triangle");
    auto side = [&](const Vec2& a, const Vec2& b, long px, long py) {
        return (b.a - a.a) * (py - a.b) - (b.b - a.b) * (px - a.a);
    };
    long count = 0;
    for (long px = minx; px <= maxx; ++px)
        for (long py = miny; py <= maxy; ++py) {
            long s0 = side(v0, v1, px, py);
            long s1 = side(v1, v2, px, py);
            long s2 = side(v2, v0, px, py);
            bool strictly_inside = (s0 > 0 && s1 > 0 && s2 > 0) || (s0 < 0 && s1 < 0 && s2 < 0);
            if (strictly_inside) ++count;
        }
    return count;
}

bool triangle_check(const Vec2& x, const Vec2& y) {
    if (x.is_zero() || y.is_zero()) throw std::invalid_argument("triangle_check: zero vector");
    if (collinear(x, y)) throw std::invalid_argument("triangle_check: collinear input");
    if (!is_primitive(x)) return false;
    return triangle_interior_pick(x, y) == 0;
}

EhaElement hall_bracket(const Vec2& y, const Vec2& x) {
    if (x.is_zero() || y.is_zero()) throw std::invalid_argument("hall_bracket: zero vector");
    if (collinear(x, y)) return EhaElement{};
    if (!triangle_check(x, y))
        throw std::invalid_argument(
            "hall_bracket: hypotheses violated (x must be primitive and the triangle "
            "(0, x, x+y) must have no interior lattice points)");
    const long eps = det2(x, y) > 0 ? 1 : -1;
    Vec2 z = x + y;
    const long dz = d_of(z);
    Vec2 z0{z.a / dz, z.b / dz};
    UPoly theta_d = theta_series(z0, static_cast<int>(dz)).back();
    RatFunc scale = RatFunc(Rat(eps)) / eha_alpha(1);
    return theta_d.to_eha(z0).scaled(scale);
}

Element phi_n(const EhaElement& e, int n) {
    if (n < 2) throw std::invalid_argument("phi_n: rank must be at least 2");
    Element out(n);
    for (const auto& [w, c] : e.terms()) {
        Element prod = Element::unit(n);
        for (const Vec2& x : w) {
            if (x.is_zero()) throw std::invalid_argument("phi_n: zero-vector generator");
            const int d = static_cast<int>(d_of(x));
            Element qx = q_elements(x, n).q.scaled(q_pow_minus_one(d).inv());
            prod = prod * qx;
        }
        out += prod.scaled(c);
    }
    return out;
}

}  // namespace bsk
