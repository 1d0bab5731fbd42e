#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "fibonadic/qphi.hpp"
#include "fibonadic/word.hpp"

namespace fibonadic {

// A natural-coefficient digit series: finitely many indices with
// coefficients >= 1, plus at most one alternating tail (coefficient 1 at
// tail_start, tail_start - 2, ...).  Zero coefficients are never stored.
// This is the raw material the normalization moves act on; admissible
// series are exactly the ZeckWords.
class NatSeries {
public:
    NatSeries() = default;
    static NatSeries from_word(const ZeckWord& z);
    static NatSeries single(int index, std::int64_t coeff);

    // Coefficient at n including the tail contribution.
    std::int64_t coeff(int n) const;
    // Stored finite part only.
    std::int64_t explicit_coeff(int n) const;

    void add_at(int n, std::int64_t k);
    void set_at(int n, std::int64_t k);  // k >= 0; zero erases

    const std::map<int, std::int64_t>& terms() const { return c_; }
    std::optional<int> tail_start() const { return tail_; }
    bool tailed() const { return tail_.has_value(); }
    void set_tail(std::optional<int> t) { tail_ = t; }

    bool empty() const { return c_.empty() && !tail_; }

    // Replace the tail by its exact folded value phi^{tail_start + 1}.
    void fold_tail();

    // Digitwise sum.  At most one operand may be tailed.
    NatSeries plus(const NatSeries& o) const;
    // Cauchy product; both operands must be finite.
    NatSeries times(const NatSeries& o) const;

    QPhi phi_value() const;

    // All coefficients 0/1 with no two adjacent (tail digits included).
    bool admissible() const;
    // The word this series spells when admissible.
    std::optional<ZeckWord> as_admissible_word() const;

    bool operator==(const NatSeries&) const = default;

private:
    std::map<int, std::int64_t> c_;  // index -> coefficient >= 1
    std::optional<int> tail_;
};

}  // namespace fibonadic
