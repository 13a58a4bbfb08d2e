#pragma once

#include <map>

#include "bsk/ratfunc.hpp"
#include "bsk/word.hpp"

namespace bsk {

/// Finite Q(s,c)-linear combination of freely reduced words on a fixed strand
/// count. No zero coefficients are stored.
class Element {
  public:
    Element() : n_(0) {}
    explicit Element(int n) : n_(n) {}
    Element(const Word& w, RatFunc coeff = RatFunc(1)) : n_(w.strands()) {
        add(w, coeff);
    }

    static Element unit(int n, RatFunc coeff = RatFunc(1)) { return Element(Word(n), coeff); }

    int strands() const { return n_; }
    const std::map<Word, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add(const Word& w, const RatFunc& coeff);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    /// Bilinear extension of concatenate-then-free-reduce.
    friend Element operator*(const Element& a, const Element& b);
    Element scaled(const RatFunc& r) const;

    friend bool operator==(const Element& a, const Element& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

  private:
    int n_;
    std::map<Word, RatFunc> terms_;
};

inline Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

/// Images of the positive generators under a substitution endomorphism;
/// inverses are sent to inverse words. Every generator occurring in the input
/// must have an image.
struct SubstImages {
    std::map<Letter, Word> images;  // keys are positive letter codes
};

/// Identity images for x1, y1 and all sigma_i at strand count n.
SubstImages identity_images(int n);

/// Apply the induced algebra endomorphism term by term.
Element substitute(const Element& e, const SubstImages& images);
Word substitute(const Word& w, const SubstImages& images);

}  // namespace bsk
