#include "fibonadic/fib.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "fibonadic/checked.hpp"
#include "fibonadic/errors.hpp"

namespace fibonadic {

FibTable::FibTable() {
    pos_.push_back(0);  // a_0
    pos_.push_back(1);  // a_1
    for (;;) {
        std::int64_t next;
        if (__builtin_add_overflow(pos_[pos_.size() - 1], pos_[pos_.size() - 2], &next)) break;
        pos_.push_back(next);
    }
}

const FibTable& FibTable::shared() {
    static const FibTable table;
    return table;
}

std::int64_t FibTable::a(std::int64_t n) const {
    std::int64_t m = n < 0 ? -n : n;
    if (m > max_index())
        throw capacity_error("fibonacci index " + std::to_string(n) + " exceeds 64-bit range");
    std::int64_t v = pos_[static_cast<std::size_t>(m)];
    if (n < 0 && m % 2 == 0) v = -v;  // a_{-n} = (-1)^{n+1} a_n
    return v;
}

std::int64_t FibTable::f(std::int64_t n) const {
    if (n <= 0) return 0;
    return a(n + 1);
}

std::int64_t fib(std::int64_t n) { return FibTable::shared().f(n); }
std::int64_t fib_a(std::int64_t n) { return FibTable::shared().a(n); }

int big_m(std::int64_t r) {
    if (r < 1) throw std::domain_error("big_m requires r >= 1");
    const FibTable& t = FibTable::shared();
    int n = 1;
    while (n + 1 <= t.max_index() - 1 && t.f(n + 1) <= r) ++n;
    return n;
}

ZeckIndexSet::ZeckIndexSet(std::vector<int> descending) : idx_(std::move(descending)) {
    for (std::size_t i = 0; i < idx_.size(); ++i) {
        if (idx_[i] < 1) throw std::domain_error("zeckendorf index below 1");
        if (i > 0 && idx_[i - 1] - idx_[i] < 2)
            throw std::domain_error("adjacent or repeated zeckendorf indices");
    }
}

ZeckIndexSet zeck(std::int64_t r) {
    if (r < 0) throw std::domain_error("zeck requires r >= 0");
    std::vector<int> idx;
    while (r > 0) {
        int m = big_m(r);
        idx.push_back(m);
        r -= fib(m);
    }
    return ZeckIndexSet(std::move(idx));
}

std::int64_t unzeck(const ZeckIndexSet& s) {
    std::int64_t r = 0;
    for (int n : s) r = checked_add(r, fib(n));
    return r;
}

std::int64_t pi_shift(std::int64_t r) {
    std::int64_t out = 0;
    for (int n : zeck(r)) out = checked_add(out, fib(n - 1));
    return out;
}

std::int64_t j_shift(std::int64_t r) {
    std::int64_t out = 0;
    for (int n : zeck(r)) out = checked_add(out, fib(n + 1));
    return out;
}

namespace {

int coboundary(std::int64_t (*s)(std::int64_t), const char* name, std::int64_t x,
               std::int64_t y) {
    if (x < 1 || y < 1) throw std::domain_error("coboundary requires x, y >= 1");
    std::int64_t d = checked_sub(checked_sub(s(checked_add(x, y)), s(x)), s(y));
    if (d < -1 || d > 1)
        throw structure_error(std::string("coboundary of ") + name + " left {-1,0,1} at (" +
                              std::to_string(x) + "," + std::to_string(y) + ")");
    return static_cast<int>(d);
}

}  // namespace

int coboundary_pi(std::int64_t x, std::int64_t y) { return coboundary(&pi_shift, "pi", x, y); }
int coboundary_j(std::int64_t x, std::int64_t y) { return coboundary(&j_shift, "j", x, y); }

}  // namespace fibonadic
