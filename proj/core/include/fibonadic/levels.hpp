#pragma once

#include <cstdint>

#include "fibonadic/farey.hpp"
#include "fibonadic/word.hpp"

namespace fibonadic {

// The n-th layer of the radius-r tree: points that sit in the (M-n-1)-fold
// branch core but not the (M-n)-fold one, M = big_m(r).  Requires n >= 1
// and big_m(r) >= n + 1.
PointSet layer(int n, std::int64_t r);

// The stable layer index of v for a principal word z: with R_m the m-th
// coherent natural of z, the value m - 1 - max{k >= 0 : |v|_k <= R_m},
// evaluated at m large enough that two consecutive m agree and
// f_{m - level} exceeds |v|^2.  Total on coprime positive v; z must be
// principal (top digit at index 0).
int level_function(const ZeckWord& z, LatticePoint v);

// Points |v| <= bound whose father-side child keeps the same level: the
// branch locus of z within the given window.
PointSet z_set(const ZeckWord& z, std::int64_t bound);

}  // namespace fibonadic
