#include "bsk/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace bsk {

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
            throw std::invalid_argument("Perm: not a bijection");
        seen[v - 1] = true;
    }
}

int Perm::length() const {
    int inv = 0;
    for (size_t i = 0; i < img_.size(); ++i)
        for (size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

Perm Perm::inverse() const {
    std::vector<int> r(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r[img_[i] - 1] = static_cast<int>(i) + 1;
    Perm p;
    p.img_ = std::move(r);
    return p;
}

Perm Perm::transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("transposition index");
    Perm p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Perm mul(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Perm::mul size mismatch");
    std::vector<int> r(a.img_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = b.img_[a.img_[i] - 1];
    Perm p;
    p.img_ = std::move(r);
    return p;
}

std::string Perm::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (i) os << " ";
        os << img_[i];
    }
    return os.str();
}

std::vector<Perm> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

namespace {

// Left descent of p at i: a reduced word for p can start with s_i.
// With mul(a, b) = "a then b", p = s_i * q means q = s_i * p and the length
// drops iff the one-line entries of p at positions i, i+1 are out of order
// after accounting for composition order. Concretely mul(s_i, p) permutes
// values through s_i first, i.e. swaps the entries *at positions* i, i+1 of p.
bool left_descent(const Perm& p, int i) {
    return p(i) > p(i + 1);
}

}  // namespace

Word perm_braid(const Perm& p) {
    const int n = p.size();
    std::vector<Letter> letters;
    Perm cur = p;
    // Peel lexicographically-least descents from the left: p = s_i * rest.
    for (;;) {
        int i = 0;
        for (int k = 1; k < n; ++k) {
            if (left_descent(cur, k)) {
                i = k;
                break;
            }
        }
        if (i == 0) break;  // identity reached
        letters.push_back(sigma_letter(i));
        cur = mul(Perm::transposition(n, i), cur);
    }
    return Word(n, std::move(letters));
}

void HeckeElement::add(const Perm& p, const RatFunc& coeff) {
    if (p.size() != n_) throw std::invalid_argument("HeckeElement::add rank mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElement HeckeElement::operator-() const {
    HeckeElement r(n_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    if (n_ != o.n_) throw std::invalid_argument("HeckeElement sum: rank mismatch");
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
    if (n_ != o.n_) throw std::invalid_argument("HeckeElement difference: rank mismatch");
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

HeckeElement HeckeElement::scaled(const RatFunc& r) const {
    HeckeElement out(n_);
    if (r.is_zero()) return out;
    for (const auto& [p, c] : terms_) out.terms_.emplace(p, c * r);
    return out;
}

std::string HeckeElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string() << " * w[" << p.to_string() << "]";
    }
    return os.str();
}

namespace {

RatFunc s_minus_sinv() {
    return RatFunc::gen_s() - RatFunc::monomial(1, -1, 0);
}

// sigma_i * w_pi straightened: w_{s_i pi} when the length goes up, else
// w_{s_i pi} + (s - s^{-1}) w_pi.
HeckeElement sigma_left_mul(int i, const HeckeElement& h) {
    const int n = h.rank();
    HeckeElement r(n);
    const Perm si = Perm::transposition(n, i);
    const RatFunc z = s_minus_sinv();
    for (const auto& [p, c] : h.terms()) {
        Perm q = mul(si, p);
        if (q.length() > p.length()) {
            r.add(q, c);
        } else {
            r.add(q, c);
            r.add(p, c * z);
        }
    }
    return r;
}

HeckeElement sigma_right_mul(const HeckeElement& h, int i) {
    const int n = h.rank();
    HeckeElement r(n);
    const Perm si = Perm::transposition(n, i);
    const RatFunc z = s_minus_sinv();
    for (const auto& [p, c] : h.terms()) {
        Perm q = mul(p, si);
        if (q.length() > p.length()) {
            r.add(q, c);
        } else {
            r.add(q, c);
            r.add(p, c * z);
        }
    }
    return r;
}

}  // namespace

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("hecke_mul: rank mismatch");
    HeckeElement r(a.rank());
    for (const auto& [p, c] : a.terms()) {
        Word w = perm_braid(p);
        HeckeElement acc = b.scaled(c);
        for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
            acc = sigma_left_mul(sigma_index(*it), acc);
        r += acc;
    }
    return r;
}

HeckeElement hecke_mul_right(const HeckeElement& a, const HeckeElement& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("hecke_mul_right: rank mismatch");
    HeckeElement r(a.rank());
    for (const auto& [p, c] : b.terms()) {
        Word w = perm_braid(p);
        HeckeElement acc = a.scaled(c);
        for (Letter l : w.letters()) acc = sigma_right_mul(acc, sigma_index(l));
        r += acc;
    }
    return r;
}

const Symmetrizer& symmetrizer(int n) {
    static std::map<int, Symmetrizer> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    Symmetrizer sym;
    sym.a_n = HeckeElement(n);
    const RatFunc s = RatFunc::gen_s();
    for (const Perm& p : all_perms(n)) sym.a_n.add(p, s.pow(p.length()));

    HeckeElement sq = hecke_mul(sym.a_n, sym.a_n);
    sym.alpha_n = sq.terms().at(Perm(n));  // a_n has coefficient 1 at the identity
    if (sym.alpha_n.is_zero()) throw std::logic_error("symmetrizer: alpha_n vanished");
    if (!(sq == sym.a_n.scaled(sym.alpha_n)))
        throw std::logic_error("symmetrizer: a_n^2 != alpha_n a_n");
    sym.e_n = sym.a_n.scaled(sym.alpha_n.inv());
    return cache.emplace(n, std::move(sym)).first->second;
}

Word full_twist(int n) {
    if (n <= 1) return Word(std::max(n, 1));
    // w = full twist on strands 2..n, i.e. the (n-1)-strand full twist with
    // every sigma index shifted up by one.
    Word inner = full_twist(n - 1);
    std::vector<Letter> letters;
    for (Letter l : inner.letters()) {
        int idx = sigma_index(l) + 1;
        letters.push_back(l > 0 ? sigma_letter(idx) : static_cast<Letter>(-sigma_letter(idx)));
    }
    Word beta = named_word(NamedWord::beta_n, n);
    letters.insert(letters.end(), beta.letters().begin(), beta.letters().end());
    return Word(n, std::move(letters));
}

Element to_element(const HeckeElement& h) {
    Element e(h.rank());
    for (const auto& [p, c] : h.terms()) e.add(perm_braid(p), c);
    return e;
}

}  // namespace bsk
