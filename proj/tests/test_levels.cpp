#include <random>

#include <doctest.h>

#include "fibonadic/errors.hpp"
#include "fibonadic/farey.hpp"
#include "fibonadic/fib.hpp"
#include "fibonadic/levels.hpp"
#include "fibonadic/word.hpp"
#include "gen.hpp"

using namespace fibonadic;

TEST_CASE("first layer of a small radius") {
    PointSet l1 = layer(1, 13);
    REQUIRE(l1.size() == 1);
    CHECK(l1[0] == LatticePoint{1, 1});
    CHECK_THROWS_AS(layer(0, 13), std::domain_error);
    CHECK_THROWS_AS(layer(6, 13), std::domain_error);
}

TEST_CASE("level values for the unit word") {
    ZeckWord one{0};
    CHECK(level_function(one, {1, 1}) == 1);
    CHECK(level_function(one, {1, 2}) == 2);
    CHECK(level_function(one, {2, 1}) == 2);
    CHECK(level_function(one, {1, 3}) == 3);
    CHECK(level_function(one, {3, 1}) == 3);
    CHECK(level_function(one, {2, 3}) == 3);
    CHECK(level_function(one, {3, 2}) == 3);
    CHECK(level_function(one, {1, 4}) == 4);
    CHECK_THROWS_AS(level_function(ZeckWord{1}, {1, 1}), std::domain_error);
}

TEST_CASE("level values for the first breakpoint word") {
    ZeckWord z = ZeckWord::with_tail({0, -2}, std::nullopt);
    CHECK(level_function(z, {1, 1}) == 1);
    CHECK(level_function(z, {2, 1}) == 2);
    CHECK(level_function(z, {1, 2}) == 2);
    CHECK(level_function(z, {3, 1}) == 2);
    CHECK(level_function(z, {1, 3}) == 2);
    CHECK(level_function(z, {5, 2}) == 3);
}

TEST_CASE("levels never decrease down the tree") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 30; ++i) {
        ZeckWord z = testgen::random_principal_word(rng, -8);
        for (LatticePoint v : ball_c(20)) {
            int l = level_function(z, v);
            CHECK(l >= 1);
            CHECK(level_function(z, v + mother(v)) >= l);
            CHECK(level_function(z, v + father(v)) >= l);
        }
    }
}

TEST_CASE("tailed words have levels too") {
    ZeckWord m = ZeckWord::tail_word(0);
    CHECK(level_function(m, {1, 1}) == 1);
    for (LatticePoint v : ball_c(12)) CHECK(level_function(m, v) >= 1);
}

TEST_CASE("branch locus within a window") {
    CHECK(z_set(ZeckWord{0}, 3).empty());
    PointSet s = z_set(ZeckWord::with_tail({0, -2}, std::nullopt), 3);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == LatticePoint{2, 1});
    CHECK(s[1] == LatticePoint{1, 2});
}

TEST_CASE("layers partition by level for the unit word") {
    // For r = f_m the coherent radii of the unit word hit r exactly, so the
    // n-th layer is the level-n set.
    std::int64_t r = fib(9);
    for (int n = 1; n <= 3; ++n) {
        PointSet ln = layer(n, r);
        for (LatticePoint v : ln) CHECK(level_function(ZeckWord{0}, v) == n);
    }
}
