#include "fibonadic/rig.hpp"

#include <optional>
#include <stdexcept>

#include "fibonadic/series.hpp"

namespace fibonadic {

namespace {

void require_one_tail(const ZeckWord& z, const ZeckWord& w) {
    if (z.tailed() && w.tailed())
        throw std::domain_error("unsupported operands: both words are tailed");
}

std::optional<int> monomial_exponent(const ZeckWord& z) {
    if (!z.tailed() && z.ones().size() == 1) return z.ones().front();
    return std::nullopt;
}

}  // namespace

ZeckWord add(const ZeckWord& z, const ZeckWord& w, std::uint64_t budget) {
    require_one_tail(z, w);
    NatSeries sum = NatSeries::from_word(z).plus(NatSeries::from_word(w));
    if (auto direct = sum.as_admissible_word()) return *direct;
    return project(sum, budget);
}

ZeckWord mul(const ZeckWord& z, const ZeckWord& w, std::uint64_t budget) {
    require_one_tail(z, w);
    if (z.is_zero() || w.is_zero()) return {};
    if (auto k = monomial_exponent(z)) return shift(w, *k);
    if (auto k = monomial_exponent(w)) return shift(z, *k);
    // A multi-term factor against a tail never yields an admissible series,
    // so fold the tail and work with finite series.
    NatSeries a = NatSeries::from_word(z);
    NatSeries b = NatSeries::from_word(w);
    a.fold_tail();
    b.fold_tail();
    return project(a.times(b), budget);
}

ZeckWord phi_power(int n) { return ZeckWord{n}; }

}  // namespace fibonadic
