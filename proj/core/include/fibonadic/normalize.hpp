#pragma once

#include <cstdint>

#include "fibonadic/qphi.hpp"
#include "fibonadic/series.hpp"
#include "fibonadic/word.hpp"

namespace fibonadic {

inline constexpr std::uint64_t kDefaultMoveBudget = 1'000'000;

// The two value-preserving rewriting moves.  Each requires z_{n+1} = 0.
//
//   A at n: z_n >= 1 and z_{n-1} >= 1; then (n+1, n, n-1) gains (1, -1, -1).
//           Uses phi^{n+1} = phi^n + phi^{n-1}.
//   B at n: z_n >= 2 and z_{n-1} = 0; then (n+1, n, n-2) gains (1, -2, 1).
//           Uses 2 phi^n = phi^{n+1} + phi^{n-2}.
//
// Violated preconditions raise std::domain_error.  Both require a finite
// series; tailed series are folded before any move is attempted.
NatSeries move_a(NatSeries s, int n);
NatSeries move_b(NatSeries s, int n);

// Coefficients strictly above n are all 0/1 with no two adjacent among
// indices > n.  The pair (n+1, n) is deliberately not constrained.
bool ok_above(const NatSeries& s, int n);

// Runs the deterministic schedule (always move at the highest index where a
// move applies; A and B are mutually exclusive at a fixed index) until the
// series is OK above n.  A tailed input is first folded via the exact
// identity sum_{j>=0} phi^{t-2j} = phi^{t+1}.  Exceeding the budget raises
// budget_error.
NatSeries normalize_to_depth(NatSeries s, int n, std::uint64_t budget = kDefaultMoveBudget);

// Full normalization to the unique admissible finite word of the same
// value.  Tailed inputs are folded first, so the representative returned
// for a tailed series is its finite greedy word.
ZeckWord project(const NatSeries& s, std::uint64_t budget = kDefaultMoveBudget);

// The greedy digit expansion of an exact nonnegative value, peeling the
// largest phi^n <= v.  Values in Z[phi] always terminate within max_digits;
// running out signals an inexpressible value and raises std::domain_error.
ZeckWord greedy_expand(QPhi v, int max_digits = 512);

}  // namespace fibonadic
