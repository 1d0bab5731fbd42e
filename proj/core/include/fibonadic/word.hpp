#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "fibonadic/qphi.hpp"

namespace fibonadic {

// An admissible golden-ratio digit word: digits 0/1 indexed over Z, support
// bounded above, never two adjacent 1s.  Two shapes are representable
// exactly:
//
//   * finite words (a finite set of indices carrying 1), and
//   * words ending in the infinite alternating tail 1 0 1 0 ..., i.e. 1s at
//     tail_start, tail_start - 2, tail_start - 4, ...
//
// Canonical form: an explicit 1 at tail_start + 2 is absorbed into the tail
// on construction (the digit sets coincide), so when a tail is present the
// lowest explicit 1 sits at tail_start + 3 or higher.  Equality of canonical
// representations is then equality of digit sequences.
class ZeckWord {
public:
    ZeckWord() = default;  // the zero word
    ZeckWord(std::initializer_list<int> ones);

    // Validates admissibility and canonicalizes.  ones in any order.
    static ZeckWord with_tail(std::vector<int> ones, std::optional<int> tail_start);
    static ZeckWord tail_word(int tail_start) { return with_tail({}, tail_start); }

    bool is_zero() const { return ones_.empty() && !tail_; }
    bool tailed() const { return tail_.has_value(); }
    bool digit(int n) const;

    // Explicit 1s, descending.  Tail digits are not listed here.
    const std::vector<int>& ones() const { return ones_; }
    std::optional<int> tail_start() const { return tail_; }

    // Highest 1; nullopt for the zero word.
    std::optional<int> top() const;

    // Lowest explicitly stored index (lowest 1 for finite words, tail_start
    // for tailed ones); nullopt for the zero word.
    std::optional<int> lowest_explicit() const;

    // Member of the principal class D, i.e. top digit exactly at index 0.
    bool principal() const { return top() == std::optional<int>(0); }

    bool operator==(const ZeckWord&) const = default;
    // Total digit order: z < w iff w has the 1 at the highest differing index.
    bool operator<(const ZeckWord& w) const;
    bool operator<=(const ZeckWord& w) const { return *this == w || *this < w; }

private:
    std::vector<int> ones_;     // descending
    std::optional<int> tail_;
};

// Highest index where the digits differ; nullopt iff equal.
std::optional<int> delta(const ZeckWord& z, const ZeckWord& w);

// The valuation metric d(z, w) = phi^delta, kept as a symbolic exponent so
// deep agreement never collapses to floating-point zero.
struct PhiDist {
    std::optional<int> exponent;  // nullopt means distance zero
    bool zero() const { return !exponent.has_value(); }
    double approx() const;
    bool operator==(const PhiDist&) const = default;
    // Compares phi^e values; zero is smallest.
    bool operator<=(const PhiDist& o) const;
};

PhiDist dist(const ZeckWord& z, const ZeckWord& w);

// Digit translation by k (multiplication by Phi^k on values).
ZeckWord shift(const ZeckWord& z, int k);

// The predecessor form: clear the lowest 1, open the alternating tail just
// below it.  Same phi-value, strictly smaller in digit order.  Requires a
// finite nonzero word.
ZeckWord minus_form(const ZeckWord& z);

// Exact value sum phi^n over the digit set; a tail at t contributes
// phi^{t+1} (geometric identity).
QPhi phi_value(const ZeckWord& z);

// The m-th coherent natural: sum of f_{m+j} over digits j, where f vanishes
// at indices <= 0.  Finite even for tailed words.
std::int64_t coherent(const ZeckWord& z, int m);

// Shift the top digit to index 0; returns the principal word and the
// original top index.  Requires a nonzero word.
std::pair<ZeckWord, int> to_principal(const ZeckWord& z);

}  // namespace fibonadic
