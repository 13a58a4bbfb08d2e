#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bsk {

using ExpVec = std::vector<std::int16_t>;

/// Laurent polynomial in X_1..X_n over a coefficient field K. K must provide
/// +, -, *, is_zero(); used with RatFunc (exact) and Fp (modular trials).
template <class K>
class LaurentPoly {
  public:
    LaurentPoly() : rank_(0) {}
    explicit LaurentPoly(int rank) : rank_(rank) {}

    static LaurentPoly monomial(int rank, const ExpVec& e, K coeff) {
        LaurentPoly p(rank);
        p.add(e, coeff);
        return p;
    }
    static LaurentPoly constant(int rank, K coeff) {
        return monomial(rank, ExpVec(rank, 0), std::move(coeff));
    }

    int rank() const { return rank_; }
    const std::map<ExpVec, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const ExpVec& e, const K& coeff) {
        if (static_cast<int>(e.size()) != rank_) throw std::invalid_argument("LaurentPoly: rank mismatch");
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, coeff);
        if (!inserted) {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    LaurentPoly scaled(const K& r) const {
        LaurentPoly p(rank_);
        if (r.is_zero()) return p;
        for (const auto& [e, c] : terms_) {
            K v = c * r;
            if (!v.is_zero()) p.terms_.emplace(e, std::move(v));
        }
        return p;
    }

    /// Multiply by the monomial X^d.
    LaurentPoly shifted(const ExpVec& d) const {
        LaurentPoly p(rank_);
        for (const auto& [e, c] : terms_) {
            ExpVec e2 = e;
            for (int i = 0; i < rank_; ++i) e2[i] = static_cast<std::int16_t>(e2[i] + d[i]);
            p.terms_.emplace(std::move(e2), c);
        }
        return p;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

  private:
    int rank_;
    std::map<ExpVec, K> terms_;
};

/// Swap variables i, i+1 (0-based).
template <class K>
LaurentPoly<K> swap_vars(const LaurentPoly<K>& f, int i) {
    LaurentPoly<K> r(f.rank());
    for (const auto& [e, c] : f.terms()) {
        ExpVec e2 = e;
        std::swap(e2[i], e2[i + 1]);
        r.add(e2, c);
    }
    return r;
}

/// Exact division by (X_i - X_j); the input must be divisible (as it is for
/// s_i f - f). Long division eliminating the highest X_i-exponent term.
template <class K>
LaurentPoly<K> divide_by_diff(const LaurentPoly<K>& f, int i, int j) {
    std::map<ExpVec, K> rem(f.terms().begin(), f.terms().end());
    LaurentPoly<K> quot(f.rank());
    std::size_t guard = 0;
    const std::size_t max_steps = 1000 + 1000 * f.terms().size();
    while (!rem.empty()) {
        if (++guard > max_steps) throw std::logic_error("divide_by_diff: input not divisible");
        auto lead = rem.begin();
        for (auto it = rem.begin(); it != rem.end(); ++it)
            if (it->first[i] > lead->first[i]) lead = it;
        ExpVec e = lead->first;
        K c = lead->second;
        e[i] = static_cast<std::int16_t>(e[i] - 1);
        quot.add(e, c);
        // rem -= c * X^e * (X_i - X_j)
        ExpVec t1 = e;
        t1[i] = static_cast<std::int16_t>(t1[i] + 1);
        ExpVec t2 = e;
        t2[j] = static_cast<std::int16_t>(t2[j] + 1);
        auto upd = [&](const ExpVec& t, const K& delta) {
            auto [it, inserted] = rem.try_emplace(t, delta);
            if (!inserted) {
                it->second = it->second + delta;
                if (it->second.is_zero()) rem.erase(it);
            }
        };
        upd(t1, -c);
        upd(t2, c);
    }
    return quot;
}

template <class K>
std::string laurent_to_string(const LaurentPoly<K>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (int i = 0; i < f.rank(); ++i) {
            if (e[i] == 0) continue;
            if (any) mono << " ";
            any = true;
            mono << "X" << (i + 1);
            if (e[i] != 1) mono << "^" << e[i];
        }
        if (!any) {
            os << c.to_string();
        } else if (c.is_one()) {
            os << mono.str();
        } else {
            os << c.to_string() << " * " << mono.str();
        }
    }
    return os.str();
}

}  // namespace bsk
