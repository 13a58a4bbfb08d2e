#include "bsk/ratfunc.hpp"

#include <sstream>

namespace bsk {

RatFunc::RatFunc(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

RatFunc RatFunc::monomial(const Rat& r, int es, int ec) {
    BiPoly num = BiPoly::monomial(r, es > 0 ? es : 0, ec > 0 ? ec : 0);
    BiPoly den = BiPoly::monomial(1, es < 0 ? -es : 0, ec < 0 ? -ec : 0);
    return RatFunc(std::move(num), std::move(den));
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = BiPoly::one();
        return;
    }
    if (!den_.is_one()) {
        BiPoly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
    }
    const Rat& lc = den_.leading_coeff();
    if (lc != 1) {
        Rat inv_lc = 1 / lc;
        num_ = num_.scaled(inv_lc);
        den_ = den_.scaled(inv_lc);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) den_ = BiPoly::one();
        else normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = BiPoly::one();
    else normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (num_.is_zero() || o.num_.is_zero()) return *this = RatFunc();
    // Cross-reduce before multiplying to keep intermediates small.
    BiPoly a = num_, b = den_, cpoly = o.num_, d = o.den_;
    if (!d.is_one()) {
        BiPoly g = poly_gcd(a, d);
        if (!g.is_one()) {
            a = divexact(a, g);
            d = divexact(d, g);
        }
    }
    if (!b.is_one()) {
        BiPoly g = poly_gcd(cpoly, b);
        if (!g.is_one()) {
            cpoly = divexact(cpoly, g);
            b = divexact(b, g);
        }
    }
    num_ = a * cpoly;
    den_ = b * d;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inv(); }

RatFunc RatFunc::inv() const {
    if (num_.is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    const Rat& lc = r.den_.leading_coeff();
    if (lc != 1) {
        Rat inv_lc = 1 / lc;
        r.num_ = r.num_.scaled(inv_lc);
        r.den_ = r.den_.scaled(inv_lc);
    }
    return r;
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc(1);
    RatFunc base = e > 0 ? *this : inv();
    long k = e > 0 ? e : -e;
    RatFunc r(1);
    while (k) {
        if (k & 1) r *= base;
        if (k >>= 1) base *= base;
    }
    return r;
}

std::uint64_t RatFunc::eval_mod(std::uint64_t sv, std::uint64_t cv, std::uint64_t p) const {
    std::uint64_t d = den_.eval_mod(sv, cv, p);
    if (d == 0) throw BadModularPoint("denominator vanishes at sampled point");
    std::uint64_t n = num_.eval_mod(sv, cv, p);
    // n * d^(p-2) mod p
    std::uint64_t inv = 1, base = d, e = p - 2;
    while (e) {
        if (e & 1) inv = static_cast<std::uint64_t>((static_cast<__uint128_t>(inv) * base) % p);
        base = static_cast<std::uint64_t>((static_cast<__uint128_t>(base) * base) % p);
        e >>= 1;
    }
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(n) * inv) % p);
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(" << den_.to_string() << ")";
    return os.str();
}

RatFunc rf_param(Param p) {
    switch (p) {
        case Param::t: return RatFunc::monomial(1, 2, 0);
        case Param::t_half: return RatFunc::gen_s();
        case Param::q: return RatFunc::monomial(1, 0, -2);
        case Param::sigma: return RatFunc::monomial(1, 0, 2);
        case Param::sigma_bar: return RatFunc::monomial(1, -2, 0);
    }
    throw std::logic_error("rf_param: unknown parameter");
}

RatFunc q_pow_minus_one(int k) { return rf_param(Param::q).pow(k) - RatFunc(1); }

}  // namespace bsk
