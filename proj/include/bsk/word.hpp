#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bsk {

/// One letter of a braid word in the punctured-torus generators. Encoded as a
/// signed code: +code is the generator, -code its inverse, with
///   x1 -> 1, y1 -> 2, sigma_i -> 2 + i  (i = 1..n-1).
using Letter = std::int16_t;

constexpr Letter kX1 = 1;
constexpr Letter kY1 = 2;
constexpr Letter sigma_letter(int i) { return static_cast<Letter>(2 + i); }
constexpr bool is_sigma(Letter l) { return l > 2 || l < -2; }
constexpr int sigma_index(Letter l) { return (l > 0 ? l : -l) - 2; }

/// Freely reduced word in x1, y1, sigma_1..sigma_{n-1}, tagged with its strand
/// count. Words are only reduced freely; all braid/skein relations are left to
/// the operator-representation oracle.
class Word {
  public:
    Word() : n_(0) {}
    explicit Word(int n) : n_(n) {}
    Word(int n, std::vector<Letter> letters);

    int strands() const { return n_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t size() const { return letters_.size(); }

    Word inverse() const;
    friend Word operator*(const Word& a, const Word& b);

    friend bool operator==(const Word& a, const Word& b) {
        return a.n_ == b.n_ && a.letters_ == b.letters_;
    }
    /// Order by length first, then letter codes; used for term maps and for
    /// deterministic rendering.
    friend bool operator<(const Word& a, const Word& b) {
        if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
        return a.letters_ < b.letters_;
    }

    std::string to_string() const;

  private:
    int n_;
    std::vector<Letter> letters_;
};

/// Cancel adjacent inverse pairs to a fixed point.
std::vector<Letter> free_reduce(const std::vector<Letter>& raw);

/// Validate that every letter is one of x1, y1, sigma_1..sigma_{n-1}.
void check_letters(int n, const std::vector<Letter>& letters);

/// The braid x_i (resp. y_i) expanded down to x_1 (resp. y_1):
/// x_{i+1} = sigma_i^{-1} x_i sigma_i^{-1}, y_{i+1} = sigma_i y_i sigma_i.
enum class XY { x, y };
Word gen_xy(int i, XY which, int n);

/// The named braid words.
///   P        = sigma_{n-1}^{-1}..sigma_1^{-1} x1 y1 x1^{-1} y1^{-1} sigma_1^{-1}..sigma_{n-1}^{-1}
///   beta_n   = sigma_1..sigma_{n-1} sigma_{n-1}..sigma_1
///   delta_i  = sigma_{i-1}..sigma_1 sigma_1..sigma_{i-1}
///   commutator_x1y1 = x1 y1 x1^{-1} y1^{-1}
enum class NamedWord { P, beta_n, delta_i, commutator_x1y1 };
Word named_word(NamedWord which, int n, int i = 0);

/// Parse/print the CLI word syntax: space-separated tokens "s1", "s2^-1",
/// "x1", "y1^-1"; the empty word prints as "1".
Word parse_word(const std::string& text, int n);

}  // namespace bsk
