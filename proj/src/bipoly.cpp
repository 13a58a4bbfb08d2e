#include "bsk/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace bsk {

bool BiPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exp2{} && terms_.begin()->second == 1;
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp2{});
}

Exp2 BiPoly::leading_exp() const {
    if (terms_.empty()) throw std::logic_error("leading_exp of zero polynomial");
    auto it = std::max_element(terms_.begin(), terms_.end(),
                               [](const auto& a, const auto& b) { return deglex_less(a.first, b.first); });
    return it->first;
}

const Rat& BiPoly::leading_coeff() const {
    return terms_.at(leading_exp());
}

int BiPoly::deg_s() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.es);
    return d;
}

int BiPoly::deg_c() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.ec);
    return d;
}

void BiPoly::add_term(const Exp2& e, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(Exp2{ea.es + eb.es, ea.ec + eb.ec}, ca * cb);
    return r;
}

BiPoly BiPoly::scaled(const Rat& r) const {
    BiPoly p;
    if (r == 0) return p;
    for (const auto& [e, c] : terms_) p.terms_[e] = c * r;
    return p;
}

BiPoly BiPoly::shifted(int es, int ec) const {
    BiPoly p;
    for (const auto& [e, c] : terms_) {
        if (e.es + es < 0 || e.ec + ec < 0) throw std::invalid_argument("BiPoly::shifted underflow");
        p.terms_[Exp2{e.es + es, e.ec + ec}] = c;
    }
    return p;
}

BiPoly divexact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw std::logic_error("divexact by zero");
    if (a.is_zero()) return BiPoly();
    if (b.is_one()) return a;
    BiPoly rem = a;
    BiPoly quot;
    const Exp2 lb = b.leading_exp();
    const Rat& cb = b.terms_.at(lb);
    while (!rem.is_zero()) {
        const Exp2 lr = rem.leading_exp();
        if (lr.es < lb.es || lr.ec < lb.ec) throw std::logic_error("divexact: not divisible");
        const Exp2 q{lr.es - lb.es, lr.ec - lb.ec};
        Rat cq = rem.terms_.at(lr) / cb;
        quot.add_term(q, cq);
        // rem -= cq * x^q * b
        for (const auto& [e, c] : b.terms_)
            rem.add_term(Exp2{e.es + q.es, e.ec + q.ec}, -cq * c);
    }
    return quot;
}

namespace {

// Univariate dense polynomial over Q in the variable c; used only inside the
// bivariate gcd, viewing Q[s,c] as (Q[c])[s].
using QPoly = std::vector<Rat>;

void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool qp_zero(const QPoly& p) { return p.empty(); }
int qp_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }


QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (qp_zero(a) || qp_zero(b)) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

QPoly qp_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qp_trim(a);
    return a;
}

QPoly qp_monic(QPoly p) {
    qp_trim(p);
    if (qp_zero(p)) return p;
    Rat lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

// Remainder of a by b over the field Q(c)-free path: plain division in Q[c].
QPoly qp_rem(QPoly a, const QPoly& b) {
    qp_trim(a);
    while (!qp_zero(a) && qp_deg(a) >= qp_deg(b)) {
        Rat f = a.back() / b.back();
        int shift = qp_deg(a) - qp_deg(b);
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        qp_trim(a);
    }
    return a;
}

QPoly qp_gcd(QPoly a, QPoly b) {
    qp_trim(a);
    qp_trim(b);
    while (!qp_zero(b)) {
        QPoly r = qp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return qp_monic(a);
}

// Exact division in Q[c].
QPoly qp_divexact(QPoly a, const QPoly& b) {
    qp_trim(a);
    if (qp_zero(a)) return {};
    if (a.size() < b.size()) throw std::logic_error("qp_divexact: not divisible");
    QPoly q(a.size() - b.size() + 1, Rat(0));
    while (!qp_zero(a)) {
        int shift = qp_deg(a) - qp_deg(b);
        if (shift < 0) throw std::logic_error("qp_divexact: not divisible");
        Rat f = a.back() / b.back();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        qp_trim(a);
    }
    return q;
}

// View of a BiPoly as coefficients in s: index k holds the Q[c]-coefficient of s^k.
std::vector<QPoly> to_rec(const BiPoly& p) {
    std::vector<QPoly> r(static_cast<size_t>(p.deg_s()) + 1);
    for (const auto& [e, c] : p.terms()) {
        auto& q = r[e.es];
        if (static_cast<int>(q.size()) <= e.ec) q.resize(e.ec + 1, Rat(0));
        q[e.ec] = c;
    }
    for (auto& q : r) qp_trim(q);
    while (r.size() > 1 && qp_zero(r.back())) r.pop_back();
    return r;
}

BiPoly from_rec(const std::vector<QPoly>& v) {
    BiPoly p;
    for (size_t k = 0; k < v.size(); ++k)
        for (size_t j = 0; j < v[k].size(); ++j)
            if (v[k][j] != 0) p.add_term(Exp2{static_cast<int>(k), static_cast<int>(j)}, v[k][j]);
    return p;
}

int rec_deg(const std::vector<QPoly>& v) {
    for (int k = static_cast<int>(v.size()) - 1; k >= 0; --k)
        if (!qp_zero(v[k])) return k;
    return -1;
}

// Gcd in Q[c] of all s-coefficients (the content of p in (Q[c])[s]).
QPoly rec_content(const std::vector<QPoly>& v) {
    QPoly g;
    for (const auto& q : v) {
        if (qp_zero(q)) continue;
        g = qp_zero(g) ? qp_monic(q) : qp_gcd(g, q);
        if (qp_deg(g) == 0) return g;  // already a unit
    }
    return g;
}

std::vector<QPoly> rec_divexact_content(const std::vector<QPoly>& v, const QPoly& g) {
    std::vector<QPoly> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = qp_zero(v[i]) ? QPoly{} : qp_divexact(v[i], g);
    return r;
}

// Pseudo-remainder of a by b in (Q[c])[s]: lc(b)^(da-db+1) * a reduced by b.
std::vector<QPoly> rec_prem(std::vector<QPoly> a, const std::vector<QPoly>& b) {
    int db = rec_deg(b);
    const QPoly& lb = b[db];
    int da = rec_deg(a);
    while (da >= db && da >= 0) {
        QPoly la = a[da];
        // a = lb*a - la*s^(da-db)*b
        for (auto& q : a) q = qp_mul(q, lb);
        for (int i = 0; i <= db; ++i)
            a[da - db + i] = qp_sub(a[da - db + i], qp_mul(la, b[i]));
        while (!a.empty() && qp_zero(a.back())) a.pop_back();
        da = rec_deg(a);
    }
    return a;
}

}  // namespace

BiPoly poly_gcd(const BiPoly& a, const BiPoly& b) {
    auto normalize = [](const BiPoly& p) {
        if (p.is_zero()) return p;
        return p.scaled(1 / p.leading_coeff());
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    if (a.is_constant() || b.is_constant()) return BiPoly::one();

    // Monomial fast path: gcd with a monomial is the min-exponent monomial of
    // the other side's common factors.
    auto mono_gcd = [](const BiPoly& m, const BiPoly& p) {
        Exp2 me = m.leading_exp();
        int es = me.es, ec = me.ec;
        for (const auto& [e, c] : p.terms()) {
            es = std::min(es, e.es);
            ec = std::min(ec, e.ec);
            if (es == 0 && ec == 0) break;
        }
        return BiPoly::monomial(1, es, ec);
    };
    if (a.is_monomial()) return mono_gcd(a, b);
    if (b.is_monomial()) return mono_gcd(b, a);

    auto ra = to_rec(a);
    auto rb = to_rec(b);
    QPoly ca = rec_content(ra);
    QPoly cb = rec_content(rb);
    QPoly cg = qp_gcd(ca, cb);
    ra = rec_divexact_content(ra, ca);
    rb = rec_divexact_content(rb, cb);

    // Primitive PRS in (Q[c])[s].
    if (rec_deg(ra) < rec_deg(rb)) std::swap(ra, rb);
    while (rec_deg(rb) >= 0) {
        auto r = rec_prem(ra, rb);
        if (rec_deg(r) >= 0) {
            QPoly cr = rec_content(r);
            r = rec_divexact_content(r, cr);
        }
        ra = std::move(rb);
        rb = std::move(r);
    }
    // ra is the primitive gcd of the primitive parts.
    std::vector<QPoly> g(ra.size());
    for (size_t i = 0; i < ra.size(); ++i) g[i] = qp_mul(ra[i], cg);
    return normalize(from_rec(g));
}

namespace {

unsigned long mod_pow(unsigned long base, unsigned long exp, unsigned long p) {
    unsigned long r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = static_cast<unsigned long>((static_cast<__uint128_t>(r) * base) % p);
        base = static_cast<unsigned long>((static_cast<__uint128_t>(base) * base) % p);
        exp >>= 1;
    }
    return r;
}

unsigned long mod_inv(unsigned long a, unsigned long p) {
    if (a % p == 0) throw std::domain_error("mod_inv of zero");
    return mod_pow(a % p, p - 2, p);
}

unsigned long rat_mod(const Rat& r, unsigned long p) {
    mpz_class num = r.get_num();
    mpz_class den = r.get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class nm = num % pz;
    if (nm < 0) nm += pz;
    mpz_class dm = den % pz;
    if (dm == 0) throw std::domain_error("coefficient denominator vanishes mod p");
    unsigned long n = nm.get_ui();
    unsigned long d = dm.get_ui();
    return static_cast<unsigned long>((static_cast<__uint128_t>(n) * mod_inv(d, p)) % p);
}

}  // namespace

unsigned long BiPoly::eval_mod(unsigned long sv, unsigned long cv, unsigned long p) const {
    unsigned long acc = 0;
    for (const auto& [e, c] : terms_) {
        unsigned long t = rat_mod(c, p);
        t = static_cast<unsigned long>((static_cast<__uint128_t>(t) * mod_pow(sv, e.es, p)) % p);
        t = static_cast<unsigned long>((static_cast<__uint128_t>(t) * mod_pow(cv, e.ec, p)) % p);
        acc = (acc + t) % p;
    }
    return acc;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    // descending deglex, s before c
    std::vector<std::pair<Exp2, Rat>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return deglex_less(b.first, a.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : v) {
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = e.es > 0 || e.ec > 0;
        if (ac != 1 || !has_vars) {
            os << ac.get_str();
            if (has_vars) os << "*";
        }
        if (e.es > 0) {
            os << "s";
            if (e.es > 1) os << "^" << e.es;
            if (e.ec > 0) os << "*";
        }
        if (e.ec > 0) {
            os << "c";
            if (e.ec > 1) os << "^" << e.ec;
        }
    }
    return os.str();
}

}  // namespace bsk
