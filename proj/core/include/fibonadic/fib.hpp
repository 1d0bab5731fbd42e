#pragma once

#include <cstdint>
#include <vector>

namespace fibonadic {

// Fibonacci numbers in the two indexings used throughout this library.
//
//   a_0 = 0, a_1 = 1, a_{n+1} = a_n + a_{n-1}, extended to all integers by
//   a_{-n} = (-1)^{n+1} a_n.
//
//   f_n = a_{n+1} for n >= 1 and f_n = 0 for n <= 0, so f_1, f_2, ... =
//   1, 2, 3, 5, 8, ... is the ladder Zeckendorf expansions are written in.
//
// All values live in int64_t; the table stops at the last representable
// entry and indices past it raise capacity_error.  The table is built once
// and never mutated, so concurrent readers are safe.
class FibTable {
public:
    static const FibTable& shared();

    // a_n for any integer n within capacity.
    std::int64_t a(std::int64_t n) const;

    // f_n; zero for n <= 0.
    std::int64_t f(std::int64_t n) const;

    // Largest n with a_n representable (also bounds f at n - 1).
    int max_index() const { return static_cast<int>(pos_.size()) - 1; }

private:
    FibTable();
    std::vector<std::int64_t> pos_;  // a_0 .. a_max
};

std::int64_t fib(std::int64_t n);    // f_n
std::int64_t fib_a(std::int64_t n);  // a_n

// Largest n with f_n <= r.  Requires r >= 1.
int big_m(std::int64_t r);

// A Zeckendorf index set: indices n >= 1 of the digits 1 in the expansion
// R = sum f_n, stored descending, never two adjacent.
class ZeckIndexSet {
public:
    ZeckIndexSet() = default;
    // Validates: indices >= 1, strictly descending, gaps >= 2.
    explicit ZeckIndexSet(std::vector<int> descending);

    const std::vector<int>& indices() const { return idx_; }
    bool empty() const { return idx_.empty(); }
    std::size_t size() const { return idx_.size(); }
    bool operator==(const ZeckIndexSet&) const = default;

    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }

private:
    std::vector<int> idx_;
};

// Greedy Zeckendorf expansion; zeck(0) is empty.
ZeckIndexSet zeck(std::int64_t r);

// Sum of f_n over the set.  The inverse of zeck on valid sets.
std::int64_t unzeck(const ZeckIndexSet& s);

// Digit shift down: sum of f_{n-1} over zeck(r).  pi_shift(f_1) = 0.
std::int64_t pi_shift(std::int64_t r);

// Digit shift up: sum of f_{n+1} over zeck(r).  pi_shift(j_shift(r)) = r.
std::int64_t j_shift(std::int64_t r);

// Additivity defects d(x,y) = s(x+y) - s(x) - s(y) for the two shifts.
// Always in {-1, 0, 1}; anything else aborts with structure_error.
int coboundary_pi(std::int64_t x, std::int64_t y);
int coboundary_j(std::int64_t x, std::int64_t y);

}  // namespace fibonadic
