#include <random>

#include "bsk/ratfunc.hpp"
#include "doctest.h"

using namespace bsk;

namespace {

RatFunc S() { return RatFunc::gen_s(); }
RatFunc C() { return RatFunc::gen_c(); }

// Small random polynomial with exponents < 3 and coefficients in [-4, 4].
BiPoly random_poly(std::mt19937& rng, bool allow_zero = true) {
    std::uniform_int_distribution<int> nt(0, 3), ex(0, 2), co(-4, 4);
    BiPoly p;
    int terms = nt(rng);
    for (int k = 0; k < terms; ++k) p.add_term(Exp2{ex(rng), ex(rng)}, co(rng));
    if (!allow_zero && p.is_zero()) p.add_term(Exp2{1, 0}, 1);
    return p;
}

RatFunc random_rf(std::mt19937& rng) {
    BiPoly num = random_poly(rng);
    BiPoly den = random_poly(rng, false);
    return RatFunc(num, den);
}

}  // namespace

TEST_CASE("normalization leaves a coprime fraction alone") {
    RatFunc f(S().num() * S().num() - BiPoly(1), BiPoly::gen_s());
    CHECK(f.to_string() == "(s^2 - 1)/(s)");
}

TEST_CASE("normalization cancels the content factor") {
    // (s^2 c - c) / (s c) -> (s^2 - 1)/s
    BiPoly num = BiPoly::monomial(1, 2, 1) - BiPoly::monomial(1, 0, 1);
    BiPoly den = BiPoly::monomial(1, 1, 1);
    RatFunc f(num, den);
    CHECK(f.to_string() == "(s^2 - 1)/(s)");
    // multiply-back cross check
    CHECK(f.num() * den == num * f.den());
}

TEST_CASE("zero normalizes to 0/1") {
    RatFunc f(BiPoly(), BiPoly::gen_s() + BiPoly::gen_c());
    CHECK(f.is_zero());
    CHECK(f.den().is_one());
    CHECK(f.to_string() == "0");
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(RatFunc(BiPoly(1), BiPoly()), std::domain_error);
}

TEST_CASE("difference of squares with negative powers") {
    RatFunc lhs = (S() - S().inv()) * (S() + S().inv());
    RatFunc rhs = RatFunc::monomial(1, 2, 0) - RatFunc::monomial(1, -2, 0);
    CHECK(lhs == rhs);
}

TEST_CASE("inverse of a monomial") {
    CHECK(S().pow(2).inv() == RatFunc::monomial(1, -2, 0));
}

TEST_CASE("partial fraction sum reduces") {
    RatFunc one(1);
    RatFunc c2 = C() * C();
    RatFunc lhs = one / (one - c2) + one / (one + c2);
    RatFunc rhs = RatFunc(2) / (one - c2 * c2);
    CHECK(lhs == rhs);
}

TEST_CASE("parameter translations") {
    CHECK(rf_param(Param::q) == RatFunc::monomial(1, 0, -2));
    CHECK(rf_param(Param::sigma) == C() * C());
    CHECK(rf_param(Param::t_half) == S());
    CHECK(rf_param(Param::t) == S() * S());
    CHECK(rf_param(Param::sigma_bar) == RatFunc::monomial(1, -2, 0));
    CHECK(rf_param(Param::sigma) == rf_param(Param::q).inv());
    CHECK(rf_param(Param::sigma_bar) == rf_param(Param::t).inv());
}

TEST_CASE("modular evaluation") {
    RatFunc f(S() * S() - RatFunc(1));
    f /= S();
    CHECK(f.eval_mod(2, 3, 7) == 5);  // (4-1) * inv(2) = 3*4 = 12 = 5 mod 7
    CHECK(RatFunc().eval_mod(5, 6, 101) == 0);
    CHECK_THROWS_AS(S().inv().eval_mod(0, 3, 7), BadModularPoint);
}

TEST_CASE("normalization is idempotent") {
    std::mt19937 rng(12345);
    for (int k = 0; k < 200; ++k) {
        RatFunc f = random_rf(rng);
        RatFunc again(f.num(), f.den());
        CHECK(f == again);
    }
}

TEST_CASE("cross-multiplication equality matches canonical equality") {
    std::mt19937 rng(777);
    for (int k = 0; k < 200; ++k) {
        RatFunc a = random_rf(rng);
        RatFunc b = random_rf(rng);
        bool canonical = (a == b);
        bool crossmul = (a.num() * b.den() == b.num() * a.den());
        CHECK(canonical == crossmul);
        // a and a scaled by a random nonzero polynomial are the same value
        BiPoly r = random_poly(rng, false);
        RatFunc a2(a.num() * r, a.den() * r);
        CHECK(a2 == a);
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(999);
    RatFunc one(1);
    for (int k = 0; k < 100; ++k) {
        RatFunc a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + RatFunc() == a);
        CHECK(a * one == a);
        CHECK(a - a == RatFunc());
        if (!a.is_zero()) {
            CHECK(a * a.inv() == one);
            CHECK(a / a == one);
        }
    }
}

TEST_CASE("modular evaluation is a ring homomorphism at good points") {
    std::mt19937 rng(4242);
    const std::uint64_t p = 1048583;  // prime > 2^20
    std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
    int done = 0;
    while (done < 50) {
        RatFunc a = random_rf(rng), b = random_rf(rng);
        std::uint64_t sv = dist(rng), cv = dist(rng);
        try {
            std::uint64_t ea = a.eval_mod(sv, cv, p);
            std::uint64_t eb = b.eval_mod(sv, cv, p);
            std::uint64_t esum = (a + b).eval_mod(sv, cv, p);
            std::uint64_t eprod = (a * b).eval_mod(sv, cv, p);
            CHECK(esum == (ea + eb) % p);
            CHECK(eprod == static_cast<std::uint64_t>((static_cast<__uint128_t>(ea) * eb) % p));
            ++done;
        } catch (const BadModularPoint&) {
            continue;  // resample per the contract
        }
    }
}

TEST_CASE("pow handles negative exponents") {
    RatFunc f = S() + C();
    CHECK(f.pow(0) == RatFunc(1));
    CHECK(f.pow(3) == f * f * f);
    CHECK(f.pow(-2) == (f * f).inv());
}
