#include <numeric>
#include <random>

#include <doctest.h>

#include "fibonadic/errors.hpp"
#include "fibonadic/farey.hpp"
#include "fibonadic/fib.hpp"

using namespace fibonadic;

TEST_CASE("slope order") {
    CHECK(slope_less({2, 1}, {1, 1}));
    CHECK(slope_less({1, 1}, {1, 2}));
    CHECK(slope_less(kZeroVertex, {5, 1}));
    CHECK(slope_less({1, 5}, kInfVertex));
    CHECK_FALSE(slope_less({1, 1}, {2, 2}));
}

TEST_CASE("ball contents") {
    CHECK(ball_c(10).size() == 31);
    PointSet b3 = ball_c(3);
    REQUIRE(b3.size() == 3);
    CHECK(b3[0] == LatticePoint{2, 1});
    CHECK(b3[1] == LatticePoint{1, 1});
    CHECK(b3[2] == LatticePoint{1, 2});
    for (LatticePoint v : ball_c(40)) {
        CHECK(std::gcd(v.x, v.y) == 1);
        CHECK(norm(v) <= 40);
        CHECK(v.x >= 1);
        CHECK(v.y >= 1);
    }
    CHECK(contains(b3, {1, 1}));
    CHECK_FALSE(contains(b3, {1, 3}));
}

TEST_CASE("mediant parents") {
    Genealogy root = genealogy({1, 1});
    CHECK(root.mother == kInfVertex);
    CHECK(root.father == kZeroVertex);
    Genealogy g = genealogy({2, 3});
    CHECK(g.mother == LatticePoint{1, 2});
    CHECK(g.father == LatticePoint{1, 1});
    CHECK(mother({3, 2}) == LatticePoint{2, 1});
    CHECK(father({1, 4}) == kInfVertex);
    CHECK_THROWS_AS(genealogy({2, 4}), std::domain_error);
    CHECK_THROWS_AS(genealogy({0, 1}), std::domain_error);

    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::int64_t> d(1, 400);
    for (int i = 0; i < 500; ++i) {
        LatticePoint v{d(rng), d(rng)};
        if (std::gcd(v.x, v.y) != 1) continue;
        Genealogy p = genealogy(v);
        CHECK(p.mother + p.father == v);
        CHECK(norm(p.mother) >= norm(p.father));
        if (!(v == LatticePoint{1, 1})) CHECK(norm(p.mother) > norm(p.father));
        // The parent pair is unimodular.
        std::int64_t det = p.mother.x * p.father.y - p.mother.y * p.father.x;
        CHECK((det == 1 || det == -1));
    }
}

TEST_CASE("depth counts mediant steps") {
    CHECK(tree_depth({1, 1}) == 0);
    CHECK(tree_depth({1, 2}) == 1);
    CHECK(tree_depth({2, 1}) == 1);
    CHECK(tree_depth({2, 3}) == 2);
    CHECK(tree_depth({1, 4}) == 3);
}

TEST_CASE("weighted norms follow the two-term recurrence") {
    CHECK(weighted_norm({2, 3}, 0) == 5);
    CHECK(weighted_norm({2, 3}, 1) == 8);
    CHECK(weighted_norm({1, 1}, 0) == 2);
    CHECK(weighted_norm({1, 1}, 1) == 3);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> d(1, 60);
    for (int i = 0; i < 300; ++i) {
        LatticePoint v{d(rng), d(rng)};
        if (std::gcd(v.x, v.y) != 1) continue;
        Genealogy g = genealogy(v);
        for (int n = 0; n <= 20; ++n) {
            std::int64_t direct = fib_a(n + 2) * norm(g.mother) + fib_a(n + 1) * norm(g.father);
            CHECK(weighted_norm(v, n) == direct);
        }
        CHECK(weighted_norm(v, 2) == weighted_norm(v, 1) + weighted_norm(v, 0));
    }
}

TEST_CASE("branch cores") {
    CHECK(ball_c_n(7, 0) == ball_c(7));
    PointSet core = branch_core(ball_c(4));
    REQUIRE(core.size() == 1);
    CHECK(core[0] == LatticePoint{1, 1});
    for (std::int64_t r = 2; r <= 60; ++r) {
        PointSet cur = ball_c(r);
        for (int n = 1; n <= 6; ++n) {
            cur = branch_core(cur);
            CHECK(cur == ball_c_n(r, n));
        }
    }
}

TEST_CASE("boundary paths are unimodular") {
    BoundaryPath p = boundary(ball_c(3));
    REQUIRE(p.vertices.size() == 5);
    CHECK(p.vertices[0] == kZeroVertex);
    CHECK(p.vertices[1] == LatticePoint{2, 1});
    CHECK(p.vertices[2] == LatticePoint{1, 1});
    CHECK(p.vertices[3] == LatticePoint{1, 2});
    CHECK(p.vertices[4] == kInfVertex);
    for (std::int64_t r = 2; r <= 80; ++r) {
        BoundaryPath q = boundary(ball_c(r));
        for (std::size_t i = 0; i + 1 < q.vertices.size(); ++i) {
            LatticePoint a = q.vertices[i], b = q.vertices[i + 1];
            CHECK(a.x * b.y - a.y * b.x == 1);
        }
    }
    CHECK_THROWS_AS(boundary(PointSet{{1, 1}, {2, 3}}), std::domain_error);
}

TEST_CASE("refinement descriptors") {
    auto steps = extract_dna(4, 0);
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].lambda == std::optional<int>(-1));
    CHECK(steps[1].lambda == std::optional<int>(1));

    for (std::int64_t r = 2; r <= 80; ++r) {
        int m = big_m(r);
        for (int n = 0; n <= m - 2; ++n) {
            BoundaryPath coarse = boundary(ball_c_n(r, n + 1));
            BoundaryPath fine = boundary(ball_c_n(r, n));
            CHECK(insert_dna(coarse, extract_dna(r, n)) == fine);
        }
    }
}

TEST_CASE("insertion identities and misuse") {
    BoundaryPath p = boundary(ball_c(5));
    CHECK(insert_dna(p, {}) == p);
    std::vector<DnaStep> bad{{std::optional<int>(0), {9, 9}, {1, 1}}};
    CHECK_THROWS_AS(insert_dna(p, bad), std::domain_error);
}
