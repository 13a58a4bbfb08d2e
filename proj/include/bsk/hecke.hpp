#pragma once

#include <map>
#include <vector>

#include "bsk/element.hpp"

namespace bsk {

/// Permutation of {1..n} in one-line notation. Composition convention:
/// mul(a, b) applies a first, then b, matching braid-word concatenation.
class Perm {
  public:
    Perm() = default;
    explicit Perm(int n);  // identity
    explicit Perm(std::vector<int> images);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }  // 1-based
    const std::vector<int>& images() const { return img_; }

    int length() const;  // inversion count
    Perm inverse() const;
    static Perm transposition(int n, int i);  // s_i = (i, i+1)
    friend Perm mul(const Perm& a, const Perm& b);

    friend bool operator==(const Perm&, const Perm&) = default;
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    std::string to_string() const;  // one-line, e.g. "2 1 3"

  private:
    std::vector<int> img_;
};

std::vector<Perm> all_perms(int n);

/// Positive permutation braid: the reduced all-positive sigma word realizing
/// p, chosen as the lexicographically least reduced word.
Word perm_braid(const Perm& p);

/// Element of the finite Hecke algebra H_n on the positive-permutation-braid
/// basis {w_pi}, with Q(s,c) coefficients.
class HeckeElement {
  public:
    HeckeElement() : n_(0) {}
    explicit HeckeElement(int n) : n_(n) {}
    HeckeElement(const Perm& p, RatFunc coeff = RatFunc(1)) : n_(p.size()) { add(p, coeff); }

    static HeckeElement unit(int n) { return HeckeElement(Perm(n)); }

    int rank() const { return n_; }
    const std::map<Perm, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Perm& p, const RatFunc& coeff);
    HeckeElement operator-() const;
    HeckeElement& operator+=(const HeckeElement& o);
    HeckeElement& operator-=(const HeckeElement& o);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    HeckeElement scaled(const RatFunc& r) const;

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;  // "coeff * w[2 1] + ..."

  private:
    int n_;
    std::map<Perm, RatFunc> terms_;
};

/// Product straightened to the basis via the quadratic relation
/// sigma^2 = (s - s^{-1}) sigma + 1, recursing on a reduced word of the left
/// factor. hecke_mul_right recurses on the right factor instead; both must
/// agree.
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_mul_right(const HeckeElement& a, const HeckeElement& b);

struct Symmetrizer {
    HeckeElement a_n;    // sum over pi of s^{l(pi)} w_pi
    RatFunc alpha_n;     // a_n * a_n = alpha_n * a_n
    HeckeElement e_n;    // a_n / alpha_n, idempotent
};

/// Computed, not hard-coded: alpha_n is read off the identity-permutation
/// coefficient of a_n^2 and the full identity a_n^2 = alpha_n a_n is verified.
const Symmetrizer& symmetrizer(int n);

/// Full twist word Delta^2, built recursively as w * beta_n with w the full
/// twist on strands 2..n.
Word full_twist(int n);

/// Embed into the word algebra via positive permutation braids.
Element to_element(const HeckeElement& h);

}  // namespace bsk
