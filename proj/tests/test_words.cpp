#include <random>

#include "bsk/daha_ops.hpp"
#include "bsk/element.hpp"
#include "doctest.h"

using namespace bsk;

namespace {

Letter inv(Letter l) { return static_cast<Letter>(-l); }

Word rand_word(std::mt19937& rng, int n, int len) {
    std::vector<Letter> ls;
    std::uniform_int_distribution<int> pick(1, 1 + n);  // codes 1..n+1
    std::uniform_int_distribution<int> sign(0, 1);
    for (int k = 0; k < len; ++k) {
        Letter l = static_cast<Letter>(pick(rng));
        ls.push_back(sign(rng) ? l : inv(l));
    }
    return Word(n, std::move(ls));
}

Element rand_elem(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> nterms(0, 3), len(0, 4), co(-3, 3);
    Element e(n);
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) e.add(rand_word(rng, n, len(rng)), RatFunc(co(rng)));
    return e;
}

}  // namespace

TEST_CASE("free reduction examples") {
    CHECK(Word(2, {kX1, inv(kX1)}).empty());
    Word w(2, {sigma_letter(1), kX1, inv(kX1), sigma_letter(1)});
    CHECK(w.letters() == std::vector<Letter>{sigma_letter(1), sigma_letter(1)});
    Word u(3, {sigma_letter(1), kY1, sigma_letter(2)});
    CHECK(u.letters() == std::vector<Letter>{sigma_letter(1), kY1, sigma_letter(2)});
}

TEST_CASE("free reduction cancels nested pairs") {
    // s1 x1 y1 y1^{-1} x1^{-1} s1^{-1} reduces to the empty word
    Word w(2, {sigma_letter(1), kX1, kY1, inv(kY1), inv(kX1), inv(sigma_letter(1))});
    CHECK(w.empty());
}

TEST_CASE("free reduction is stable under inserting cancelling pairs") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> pick(1, 3), sign(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        Word base = rand_word(rng, 2, 6);
        std::vector<Letter> noisy(base.letters().begin(), base.letters().end());
        for (int ins = 0; ins < 5; ++ins) {
            std::uniform_int_distribution<size_t> pos(0, noisy.size());
            size_t at = pos(rng);
            Letter l = static_cast<Letter>(pick(rng));
            if (sign(rng)) l = inv(l);
            noisy.insert(noisy.begin() + at, {l, inv(l)});
        }
        CHECK(Word(2, noisy) == base);
    }
}

TEST_CASE("word inverse law") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 100; ++trial) {
        Word w = rand_word(rng, 3, 8);
        CHECK((w.inverse() * w).empty());
        CHECK((w * w.inverse()).empty());
    }
}

TEST_CASE("letter bounds are enforced") {
    CHECK_THROWS_AS(Word(2, {sigma_letter(2)}), std::out_of_range);  // needs n >= 3
    CHECK_NOTHROW(Word(3, {sigma_letter(2)}));
}

TEST_CASE("x_i and y_i expansions") {
    CHECK(gen_xy(1, XY::x, 2).letters() == std::vector<Letter>{kX1});
    CHECK(gen_xy(2, XY::x, 2).letters() ==
          std::vector<Letter>{inv(sigma_letter(1)), kX1, inv(sigma_letter(1))});
    CHECK(gen_xy(2, XY::y, 2).letters() ==
          std::vector<Letter>{sigma_letter(1), kY1, sigma_letter(1)});
    CHECK(gen_xy(3, XY::y, 3).letters() ==
          std::vector<Letter>{sigma_letter(2), sigma_letter(1), kY1, sigma_letter(1), sigma_letter(2)});
    CHECK_THROWS_AS(gen_xy(4, XY::x, 3), std::out_of_range);
}

TEST_CASE("named words") {
    Word p2 = named_word(NamedWord::P, 2);
    CHECK(p2.letters() == std::vector<Letter>{inv(sigma_letter(1)), kX1, kY1, inv(kX1), inv(kY1),
                                              inv(sigma_letter(1))});
    Word b3 = named_word(NamedWord::beta_n, 3);
    CHECK(b3.letters() ==
          std::vector<Letter>{sigma_letter(1), sigma_letter(2), sigma_letter(2), sigma_letter(1)});
    CHECK(named_word(NamedWord::delta_i, 3, 1).empty());
    CHECK(named_word(NamedWord::delta_i, 3, 2).letters() ==
          std::vector<Letter>{sigma_letter(1), sigma_letter(1)});
    CHECK_THROWS_AS(named_word(NamedWord::delta_i, 3, 4), std::out_of_range);
}

TEST_CASE("element product basics") {
    Element x1(Word(2, {kX1}));
    Element y1(Word(2, {kY1}));
    CHECK((x1 + y1) * Element::unit(2) == x1 + y1);
    Element x1i(Word(2, {inv(kX1)}));
    CHECK(x1 * x1i == Element::unit(2));
    // (a+b)(a-b) = a^2 - ab + ba - b^2 for noncommuting letters
    Element prod = (x1 + y1) * (x1 - y1);
    CHECK(prod.term_count() == 4);
    CHECK(prod.terms().at(Word(2, {kX1, kX1})) == RatFunc(1));
    CHECK(prod.terms().at(Word(2, {kX1, kY1})) == RatFunc(-1));
    CHECK(prod.terms().at(Word(2, {kY1, kX1})) == RatFunc(1));
    CHECK(prod.terms().at(Word(2, {kY1, kY1})) == RatFunc(-1));
}

TEST_CASE("element product is associative and unital on random elements") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        Element a = rand_elem(rng, 2), b = rand_elem(rng, 2), c = rand_elem(rng, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * Element::unit(2) == a);
        CHECK(Element::unit(2) * a == a);
    }
}

TEST_CASE("strand mismatch is an error") {
    Element a(Word(2, {kX1}));
    Element b(Word(3, {kX1}));
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("substitution endomorphism examples") {
    // tau1: y1 -> y1 x1
    Element y1(Word(2, {kY1}));
    CHECK(tau_apply(TauGen::tau1, y1) == Element(Word(2, {kY1, kX1})));
    // tau2^{-1}: x1 -> x1 y1^{-1}
    Element x1(Word(2, {kX1}));
    CHECK(tau_apply(TauGen::tau2_inv, x1) == Element(Word(2, {kX1, inv(kY1)})));
    // identity images fix everything
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Element e = rand_elem(rng, 3);
        CHECK(substitute(e, identity_images(3)) == e);
    }
}

TEST_CASE("substitution respects products and inverses") {
    std::mt19937 rng(777);
    SubstImages img = tau_images(TauGen::tau1, 2);
    for (int trial = 0; trial < 60; ++trial) {
        Element a = rand_elem(rng, 2), b = rand_elem(rng, 2);
        CHECK(substitute(a * b, img) == substitute(a, img) * substitute(b, img));
        Word w = rand_word(rng, 2, 6);
        CHECK(substitute(w.inverse(), img) == substitute(w, img).inverse());
    }
}

TEST_CASE("missing image is an error") {
    SubstImages img;
    img.images[kX1] = Word(2, {kX1});
    CHECK_THROWS_AS(substitute(Element(Word(2, {kY1})), img), std::invalid_argument);
}

TEST_CASE("word text round trip") {
    Word w(3, {sigma_letter(2), inv(kY1), kX1, kX1});
    CHECK(w.to_string() == "s2 y1^-1 x1 x1");
    CHECK(parse_word(w.to_string(), 3) == w);
    CHECK(parse_word("1", 2).empty());
    CHECK(parse_word("s1^-2 x1^3", 2) ==
          Word(2, {inv(sigma_letter(1)), inv(sigma_letter(1)), kX1, kX1, kX1}));
    CHECK_THROWS(parse_word("z9", 2));
}
