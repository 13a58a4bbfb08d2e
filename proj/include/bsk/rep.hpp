#pragma once

#include <functional>
#include <optional>
#include <string>

#include "bsk/element.hpp"
#include "bsk/fp.hpp"
#include "bsk/laurent.hpp"

namespace bsk {

/// One point of the documented convention space for the polynomial
/// representation. The base operator family is fixed:
///   T_i  ->  lam * s_i + u~ / (X_i/X_{i+1} - 1) * (s_i - 1),
///            lam = t~^{-1/2}, u~ = t~^{-1/2} - t~^{1/2}
///   Y_1  ->  T_1 T_2 ... T_{n-1} . omega
///   omega: f(X_1..X_n) -> f(g X_n, X_1, .., X_{n-1})   (or mirrored)
/// and the four switches below span 16 candidate variants:
///   t_flip:     t~ = t^{-1} instead of t
///   T_inverted: represent T_i by the inverse base operator
///   q_flip:     g = q^{-1} instead of q
///   shift_left: omega rotates the other way, f -> f(X_2, .., X_n, g X_1)
struct RepConvention {
    bool t_flip = false;
    bool T_inverted = false;
    bool q_flip = false;
    bool shift_left = false;

    static constexpr int kCount = 16;
    int index() const {
        return (t_flip ? 1 : 0) | (T_inverted ? 2 : 0) | (q_flip ? 4 : 0) | (shift_left ? 8 : 0);
    }
    static RepConvention from_index(int i) {
        return RepConvention{(i & 1) != 0, (i & 2) != 0, (i & 4) != 0, (i & 8) != 0};
    }
    friend bool operator==(const RepConvention&, const RepConvention&) = default;
    std::string to_string() const;
};

/// The polynomial representation of rank n over coefficient field K, together
/// with the map taking Q(s,c) scalars into K. All operators are pure; every
/// apply_* returns a fresh polynomial.
template <class K>
class Rep {
  public:
    using Poly = LaurentPoly<K>;
    using CoeffMap = std::function<K(const RatFunc&)>;

    Rep(int n, RepConvention conv, K s_img, K c_img, K one, CoeffMap coeff_map)
        : n_(n), conv_(conv), s_(std::move(s_img)), c_(std::move(c_img)), one_(std::move(one)),
          coeff_map_(std::move(coeff_map)) {
        K th = conv.t_flip ? s_.inv() : s_;  // t~^{1/2}
        lambda_ = th.inv();
        u_op_ = lambda_ - th;
        K q = (c_ * c_).inv();
        gamma_ = conv.q_flip ? (c_ * c_) : q;
        u_true_ = s_.inv() - s_;
        q_true_ = q;
    }

    int rank() const { return n_; }
    const RepConvention& convention() const { return conv_; }
    const K& u_true() const { return u_true_; }    // t^{-1/2} - t^{1/2}
    const K& q_true() const { return q_true_; }    // c^{-2}
    const K& one() const { return one_; }
    K map_coeff(const RatFunc& r) const { return coeff_map_(r); }

    Poly constant_one() const { return Poly::constant(n_, one_); }
    Poly monomial(const ExpVec& e) const { return Poly::monomial(n_, e, one_); }

    /// X_j^power, 1-based j.
    Poly apply_X(int j, int power, const Poly& f) const {
        ExpVec d(n_, 0);
        d[j - 1] = static_cast<std::int16_t>(power);
        return f.shifted(d);
    }

    /// T_i or its inverse, 1-based i.
    Poly apply_T(int i, bool inverse, const Poly& f) const {
        bool base = conv_.T_inverted ? inverse : !inverse;
        return base ? dl(i - 1, f) : dl_inv(i - 1, f);
    }

    Poly apply_omega(bool inverse, const Poly& f) const {
        Poly r(n_);
        for (const auto& [e, c] : f.terms()) {
            ExpVec e2(n_);
            long wrap;
            if (!conv_.shift_left) {
                if (!inverse) {
                    // (a1..an) -> (a2..an, a1), scalar gamma^{a1}
                    for (int k = 0; k + 1 < n_; ++k) e2[k] = e[k + 1];
                    e2[n_ - 1] = e[0];
                    wrap = e[0];
                } else {
                    for (int k = 1; k < n_; ++k) e2[k] = e[k - 1];
                    e2[0] = e[n_ - 1];
                    wrap = -static_cast<long>(e[n_ - 1]);
                }
            } else {
                if (!inverse) {
                    // (a1..an) -> (an, a1..a_{n-1}), scalar gamma^{an}
                    for (int k = 1; k < n_; ++k) e2[k] = e[k - 1];
                    e2[0] = e[n_ - 1];
                    wrap = e[n_ - 1];
                } else {
                    for (int k = 0; k + 1 < n_; ++k) e2[k] = e[k + 1];
                    e2[n_ - 1] = e[0];
                    wrap = -static_cast<long>(e[0]);
                }
            }
            r.add(e2, c * k_pow(gamma_, wrap));
        }
        return r;
    }

    Poly apply_Y1(bool inverse, const Poly& f) const {
        Poly g = f;
        if (!inverse) {
            g = apply_omega(false, g);
            for (int i = n_ - 1; i >= 1; --i) g = apply_T(i, false, g);
        } else {
            for (int i = 1; i <= n_ - 1; ++i) g = apply_T(i, true, g);
            g = apply_omega(true, g);
        }
        return g;
    }

    /// Y_j = T_{j-1}^{-1} .. T_1^{-1} Y_1 T_1^{-1} .. T_{j-1}^{-1}, 1-based j.
    Poly apply_Y(int j, bool inverse, const Poly& f) const {
        Poly g = f;
        for (int i = j - 1; i >= 1; --i) g = apply_T(i, !inverse, g);
        g = apply_Y1(inverse, g);
        for (int i = 1; i <= j - 1; ++i) g = apply_T(i, !inverse, g);
        return g;
    }

    /// Skein generator translation: x1 -> X_1, y1 -> Y_1, sigma_i -> T_i^{-1}.
    Poly apply_letter(Letter l, const Poly& f) const {
        bool positive = l > 0;
        Letter a = positive ? l : static_cast<Letter>(-l);
        if (a == kX1) return apply_X(1, positive ? 1 : -1, f);
        if (a == kY1) return apply_Y1(!positive, f);
        return apply_T(sigma_index(a), positive, f);  // sigma -> T^{-1}
    }

    /// Words act with the rightmost letter applied first.
    Poly apply_word(const Word& w, const Poly& f) const {
        Poly g = f;
        for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
            g = apply_letter(*it, g);
        return g;
    }

    Poly apply_element(const Element& e, const Poly& f) const {
        Poly acc(n_);
        for (const auto& [w, coeff] : e.terms()) {
            K kc = coeff_map_(coeff);
            if (kc.is_zero()) continue;
            acc += apply_word(w, f).scaled(kc);
        }
        return acc;
    }

  private:
    K k_pow(const K& base, long e) const {
        K r = one_;
        if (e == 0) return r;
        K b = e > 0 ? base : base.inv();
        for (long k = e > 0 ? e : -e; k > 0; --k) r = r * b;
        return r;
    }

    // Base Demazure-Lusztig operator and its inverse (base - u~ has the
    // inverse role since base^2 = u~ * base + 1).
    Poly dl(int i, const Poly& f) const {
        Poly sf = swap_vars(f, i);
        Poly diff = sf - f;
        Poly h = divide_by_diff(diff, i, i + 1);
        ExpVec d(n_, 0);
        d[i + 1] = 1;
        return sf.scaled(lambda_) + h.shifted(d).scaled(u_op_);
    }
    Poly dl_inv(int i, const Poly& f) const { return dl(i, f) - f.scaled(u_op_); }

    int n_;
    RepConvention conv_;
    K s_, c_, one_;
    CoeffMap coeff_map_;
    K lambda_, u_op_, gamma_, u_true_, q_true_;
};

/// Exact representation over Q(s, c).
Rep<RatFunc> exact_rep(int n, const RepConvention& conv);

/// Modular representation at (s, c) = (s0, c0) in F_p. Mapping a coefficient
/// whose denominator vanishes at the point throws BadModularPoint.
Rep<Fp> modular_rep(int n, const RepConvention& conv, std::uint64_t s0, std::uint64_t c0,
                    std::uint64_t p);

/// A relation instance that failed, with the witnessing monomial.
struct RelFailure {
    std::string relation;
    ExpVec monomial;
    std::string detail;
};

/// The defining operator relations, grouped into named families so suites can
/// report them individually. Families 0..10 together cover the nine numbered
/// relations (the mixed-commutator and X/Y-pair relations are split).
struct RelationFamily {
    std::string id;
    std::string statement;
};
const std::vector<RelationFamily>& relation_families();

template <class K>
std::optional<RelFailure> check_relation_family(const Rep<K>& rep, int family, int box_radius);

/// Check every family on the monomial box; returns the first failure, if any.
template <class K>
std::optional<RelFailure> check_relations(const Rep<K>& rep, int box_radius);

/// Exhaustive search over the 16-variant convention space at n = 2 on the
/// radius-2 box. Exactly one variant must pass; otherwise throws
/// std::runtime_error with a per-variant diagnostic.
struct ConventionSearch {
    RepConvention selected;
    std::vector<std::pair<RepConvention, std::string>> rejected;  // variant -> first failure
};
ConventionSearch search_conventions();

/// The cached result of search_conventions().
const RepConvention& selected_convention();

/// Iterate all exponent vectors in {-R..R}^n in lexicographic order.
std::vector<ExpVec> box_monomials(int n, int box_radius);

extern template class Rep<RatFunc>;
extern template class Rep<Fp>;
extern template std::optional<RelFailure> check_relations<RatFunc>(const Rep<RatFunc>&, int);
extern template std::optional<RelFailure> check_relations<Fp>(const Rep<Fp>&, int);
extern template std::optional<RelFailure> check_relation_family<RatFunc>(const Rep<RatFunc>&, int, int);
extern template std::optional<RelFailure> check_relation_family<Fp>(const Rep<Fp>&, int, int);

}  // namespace bsk
