#include <stdexcept>

#include "bsk/sl2.hpp"
#include "doctest.h"

using namespace bsk;

TEST_CASE("gcd and primitivity") {
    CHECK(d_of(Vec2{4, -6}) == 2);
    CHECK(d_of(Vec2{0, 5}) == 5);
    CHECK(is_primitive(Vec2{2, 3}));
    CHECK(!is_primitive(Vec2{2, 4}));
    CHECK(collinear(Vec2{2, 4}, Vec2{-1, -2}));
    CHECK(!collinear(Vec2{1, 0}, Vec2{1, 1}));
}

TEST_CASE("tau matrices") {
    CHECK(tau_matrix(TauGen::tau1).apply(Vec2{0, 1}) == Vec2{1, 1});
    CHECK(tau_matrix(TauGen::tau2).apply(Vec2{0, 1}) == Vec2{0, 1});
    // quarter turn theta = t1 t2^{-1} t1 = [0 1; -1 0], so theta^2 = -I
    Mat2 theta = path_matrix({TauGen::tau1, TauGen::tau2_inv, TauGen::tau1});
    CHECK(theta == Mat2{{0, 1, -1, 0}});
    CHECK(theta * theta == Mat2{{-1, 0, 0, -1}});
}

TEST_CASE("base direction gives the empty path") {
    CHECK(sl2_path(Vec2{0, 1}).empty());
    CHECK(sl2_path(Vec2{0, 3}).empty());
}

TEST_CASE("diagonal vector takes a single twist") {
    auto p = sl2_path(Vec2{1, 1});
    REQUIRE(p.size() == 1);
    CHECK(p[0] == TauGen::tau1);
}

TEST_CASE("horizontal vector routes through the quarter turn") {
    auto p = sl2_path(Vec2{2, 0});
    CHECK(path_matrix(p).apply(Vec2{0, 2}) == Vec2{2, 0});
}

TEST_CASE("zero vector is rejected") {
    CHECK_THROWS_AS(sl2_path(Vec2{0, 0}), std::invalid_argument);
}

TEST_CASE("paths are valid on a grid and deterministic") {
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b) {
            if (a == 0 && b == 0) continue;
            Vec2 x{a, b};
            auto p1 = sl2_path(x);
            auto p2 = sl2_path(x);
            CHECK(p1 == p2);
            CHECK(path_matrix(p1).apply(Vec2{0, d_of(x)}) == x);
        }
}

TEST_CASE("alternative paths are valid and distinct") {
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            if (a == 0 && b == 0) continue;
            Vec2 x{a, b};
            auto p = sl2_path(x);
            auto q = sl2_path_alternative(x);
            CHECK(path_matrix(q).apply(Vec2{0, d_of(x)}) == x);
            CHECK(p != q);
        }
}

TEST_CASE("path rendering") {
    CHECK(path_to_string({}) == "id");
    CHECK(path_to_string({TauGen::tau1, TauGen::tau2_inv}) == "t1 t2^-1");
}
