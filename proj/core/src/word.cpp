#include "fibonadic/word.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "fibonadic/checked.hpp"
#include "fibonadic/errors.hpp"
#include "fibonadic/fib.hpp"

namespace fibonadic {

ZeckWord::ZeckWord(std::initializer_list<int> ones) {
    *this = with_tail(std::vector<int>(ones), std::nullopt);
}

ZeckWord ZeckWord::with_tail(std::vector<int> ones, std::optional<int> tail_start) {
    std::sort(ones.begin(), ones.end(), std::greater<int>());
    for (std::size_t i = 1; i < ones.size(); ++i) {
        if (ones[i - 1] - ones[i] < 2)
            throw std::domain_error("adjacent or repeated digits in word");
    }
    if (tail_start) {
        if (!ones.empty() && ones.back() <= *tail_start + 1)
            throw std::domain_error("explicit digit collides with the tail");
        // Absorb explicit 1s that extend the tail chain.
        while (!ones.empty() && ones.back() == *tail_start + 2) {
            tail_start = ones.back();
            ones.pop_back();
        }
    }
    ZeckWord z;
    z.ones_ = std::move(ones);
    z.tail_ = tail_start;
    return z;
}

bool ZeckWord::digit(int n) const {
    if (tail_ && n <= *tail_ && (*tail_ - n) % 2 == 0) return true;
    return std::binary_search(ones_.begin(), ones_.end(), n, std::greater<int>());
}

std::optional<int> ZeckWord::top() const {
    if (!ones_.empty()) return ones_.front();
    return tail_;
}

std::optional<int> ZeckWord::lowest_explicit() const {
    if (tail_) return tail_;
    if (!ones_.empty()) return ones_.back();
    return std::nullopt;
}

bool ZeckWord::operator<(const ZeckWord& w) const {
    auto d = delta(*this, w);
    if (!d) return false;
    return w.digit(*d);
}

std::optional<int> delta(const ZeckWord& z, const ZeckWord& w) {
    if (z == w) return std::nullopt;
    int hi = 0;
    if (auto t = z.top()) hi = std::max(hi, *t);
    if (auto t = w.top()) hi = std::max(hi, *t);
    int lo = 0;
    if (auto l = z.lowest_explicit()) lo = std::min(lo, *l);
    if (auto l = w.lowest_explicit()) lo = std::min(lo, *l);
    lo -= 3;
    // Below lo both words are pure parity tails or zero; canonical unequal
    // words must therefore differ somewhere in [lo, hi].
    for (int n = hi; n >= lo; --n)
        if (z.digit(n) != w.digit(n)) return n;
    throw structure_error("delta: unequal canonical words with no differing digit");
}

double PhiDist::approx() const {
    if (!exponent) return 0.0;
    static const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return std::pow(phi, static_cast<double>(*exponent));
}

bool PhiDist::operator<=(const PhiDist& o) const {
    if (!exponent) return true;
    if (!o.exponent) return false;
    return *exponent <= *o.exponent;
}

PhiDist dist(const ZeckWord& z, const ZeckWord& w) { return {delta(z, w)}; }

ZeckWord shift(const ZeckWord& z, int k) {
    std::vector<int> ones = z.ones();
    for (int& n : ones) n += k;
    std::optional<int> t = z.tail_start();
    if (t) *t += k;
    return ZeckWord::with_tail(std::move(ones), t);
}

ZeckWord minus_form(const ZeckWord& z) {
    if (z.is_zero()) throw std::domain_error("minus_form of the zero word");
    if (z.tailed()) throw std::domain_error("minus_form requires a finite word");
    std::vector<int> ones = z.ones();
    int low = ones.back();
    ones.pop_back();
    return ZeckWord::with_tail(std::move(ones), low - 1);
}

QPhi phi_value(const ZeckWord& z) {
    QPhi v;
    for (int n : z.ones()) v = v + phi_pow(n);
    if (auto t = z.tail_start()) v = v + phi_pow(*t + 1);
    return v;
}

std::int64_t coherent(const ZeckWord& z, int m) {
    std::int64_t r = 0;
    for (int n : z.ones())
        if (m + n >= 1) r = checked_add(r, fib(m + n));
    if (auto t = z.tail_start()) {
        for (int n = *t; m + n >= 1; n -= 2) r = checked_add(r, fib(m + n));
    }
    return r;
}

std::pair<ZeckWord, int> to_principal(const ZeckWord& z) {
    auto t = z.top();
    if (!t) throw std::domain_error("to_principal of the zero word");
    return {shift(z, -*t), *t};
}

}  // namespace fibonadic
