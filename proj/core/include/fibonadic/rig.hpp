#pragma once

#include <cstdint>

#include "fibonadic/normalize.hpp"
#include "fibonadic/word.hpp"

namespace fibonadic {

// Commutative rig structure on admissible words, transported through the
// digitwise sum and Cauchy product of the underlying series.
//
// Representative policy: the projection fixes admissible series pointwise,
// so when the exact digitwise combination is already an admissible word it
// is returned unchanged (this keeps z + 0 = z even for tailed z).  Only a
// non-admissible combination folds its single tail and projects.  A
// monomial factor Phi^k multiplies any word, tailed or not, by an exact
// digit shift.  Combining two tailed operands is not supported and raises
// std::domain_error.
ZeckWord add(const ZeckWord& z, const ZeckWord& w,
             std::uint64_t budget = kDefaultMoveBudget);
ZeckWord mul(const ZeckWord& z, const ZeckWord& w,
             std::uint64_t budget = kDefaultMoveBudget);

// The monomial Phi^n: a single digit at index n.
ZeckWord phi_power(int n);

}  // namespace fibonadic
