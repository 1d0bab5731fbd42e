#include <cmath>
#include <cstdint>
#include <vector>

#include <doctest.h>

#include "fibonadic/errors.hpp"
#include "fibonadic/fib.hpp"

using namespace fibonadic;

TEST_CASE("table values in both indexings") {
    const std::int64_t f[] = {0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    for (int n = 0; n <= 10; ++n) CHECK(fib(n) == f[n]);
    CHECK(fib(-1) == 0);
    CHECK(fib(-7) == 0);
    const std::int64_t a[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    for (int n = 0; n <= 10; ++n) CHECK(fib_a(n) == a[n]);
}

TEST_CASE("negative indices alternate in sign") {
    for (int n = 1; n <= 40; ++n) {
        std::int64_t expect = (n % 2 == 0) ? -fib_a(n) : fib_a(n);
        CHECK(fib_a(-n) == expect);
    }
}

TEST_CASE("closed form agreement") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double psi = (1.0 - std::sqrt(5.0)) / 2.0;
    for (int n = 1; n <= 70; ++n) {
        double closed = (std::pow(phi, n) - std::pow(psi, n)) / std::sqrt(5.0);
        double rel = std::fabs(closed - static_cast<double>(fib_a(n))) /
                     static_cast<double>(fib_a(n));
        CHECK(rel < 1e-9);
    }
}

TEST_CASE("capacity edge") {
    CHECK(fib_a(92) == 7540113804746346429LL);
    CHECK(fib_a(91) + fib_a(90) == fib_a(92));
    CHECK_THROWS_AS(fib_a(93), capacity_error);
    CHECK_THROWS_AS(fib(92), capacity_error);
    CHECK(fib(91) == fib_a(92));
}

TEST_CASE("largest index below a bound") {
    CHECK(big_m(1) == 1);
    CHECK(big_m(2) == 2);
    CHECK(big_m(3) == 3);
    CHECK(big_m(4) == 3);
    CHECK(big_m(12) == 5);
    CHECK(big_m(13) == 6);
    CHECK_THROWS_AS(big_m(0), std::domain_error);
    for (std::int64_t r = 1; r <= 2000; ++r) {
        int m = big_m(r);
        CHECK(fib(m) <= r);
        CHECK(fib(m + 1) > r);
    }
}

TEST_CASE("greedy expansion round trip and gap invariant") {
    CHECK(zeck(0).empty());
    CHECK(zeck(13) == ZeckIndexSet({6}));
    CHECK(zeck(12) == ZeckIndexSet({5, 3, 1}));
    CHECK(zeck(26) == ZeckIndexSet({7, 4}));
    for (std::int64_t r = 0; r <= 10000; ++r) {
        ZeckIndexSet s = zeck(r);
        CHECK(unzeck(s) == r);
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            CHECK(s.indices()[i] - s.indices()[i + 1] >= 2);
    }
}

TEST_CASE("expansion is the only non-adjacent subset") {
    // Every sum of non-adjacent indices in 1..12 occurs exactly once.
    std::vector<int> hits(400, 0);
    std::vector<std::vector<int>> stack{{}};
    for (int n = 1; n <= 12; ++n) {
        std::size_t sz = stack.size();
        for (std::size_t i = 0; i < sz; ++i) {
            const auto& s = stack[i];
            if (s.empty() || n - s.back() >= 2) {
                auto t = s;
                t.push_back(n);
                stack.push_back(std::move(t));
            }
        }
    }
    for (const auto& s : stack) {
        std::int64_t sum = 0;
        for (int n : s) sum += fib(n);
        if (sum < 400) ++hits[static_cast<std::size_t>(sum)];
    }
    for (int r = 0; r < 377; ++r) CHECK(hits[static_cast<std::size_t>(r)] == 1);
}

TEST_CASE("index set validation") {
    CHECK_THROWS_AS(ZeckIndexSet({3, 2}), std::domain_error);
    CHECK_THROWS_AS(ZeckIndexSet({2, 3}), std::domain_error);
    CHECK_THROWS_AS(ZeckIndexSet({0}), std::domain_error);
    CHECK_THROWS_AS(ZeckIndexSet({4, 4}), std::domain_error);
    CHECK(ZeckIndexSet({6, 4, 1}).size() == 3);
}

TEST_CASE("shift values and inverse relation") {
    CHECK(pi_shift(13) == 8);
    CHECK(pi_shift(26) == 16);
    CHECK(pi_shift(12) == 7);
    CHECK(pi_shift(1) == 0);
    CHECK(j_shift(13) == 21);
    CHECK(j_shift(1) == 2);
    for (std::int64_t r = 0; r <= 5000; ++r) CHECK(pi_shift(j_shift(r)) == r);
}

TEST_CASE("shift defects stay within one unit") {
    CHECK(coboundary_pi(1, 1) == 1);
    CHECK(coboundary_pi(13, 13) == 0);
    CHECK(coboundary_pi(1, 12) == 1);
    for (std::int64_t x = 1; x <= 120; ++x)
        for (std::int64_t y = 1; y <= 120; ++y) {
            int dp = coboundary_pi(x, y);
            int dj = coboundary_j(x, y);
            CHECK(dp >= -1);
            CHECK(dp <= 1);
            CHECK(dj >= -1);
            CHECK(dj <= 1);
        }
    CHECK_THROWS_AS(coboundary_pi(0, 5), std::domain_error);
}
