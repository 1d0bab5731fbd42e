#include "fibonadic/qphi.hpp"

#include <cmath>
#include <cstdlib>

#include "fibonadic/checked.hpp"
#include "fibonadic/errors.hpp"
#include "fibonadic/fib.hpp"

namespace fibonadic {

int QPhi::sign() const {
    if (a == 0 && b == 0) return 0;
    if (a >= 0 && b >= 0) return 1;
    if (a <= 0 && b <= 0) return -1;
    // Mixed signs.  2(a + b phi) = (2a + b) + b sqrt(5); compare the squares.
    // |a|, |b| < 2^62 keeps both squares inside __int128.
    constexpr std::int64_t kLimit = std::int64_t(1) << 62;
    if (std::llabs(a) >= kLimit || std::llabs(b) >= kLimit)
        throw capacity_error("QPhi::sign operands too large for exact comparison");
    __int128 u = 2 * static_cast<__int128>(a) + b;
    __int128 lhs = u * u;
    __int128 rhs = 5 * static_cast<__int128>(b) * b;
    // lhs == rhs would make sqrt 5 rational; b != 0 here.
    if (b > 0) {
        if (u >= 0) return 1;
        return lhs < rhs ? 1 : -1;
    }
    if (u <= 0) return -1;
    return lhs > rhs ? 1 : -1;
}

bool QPhi::operator<(const QPhi& o) const { return (o - *this).sign() > 0; }
bool QPhi::operator<=(const QPhi& o) const { return (o - *this).sign() >= 0; }

double QPhi::approx() const {
    static const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return static_cast<double>(a) + static_cast<double>(b) * phi;
}

QPhi operator+(QPhi u, QPhi v) { return {checked_add(u.a, v.a), checked_add(u.b, v.b)}; }
QPhi operator-(QPhi u, QPhi v) { return {checked_sub(u.a, v.a), checked_sub(u.b, v.b)}; }

QPhi operator*(QPhi u, QPhi v) {
    std::int64_t ac = checked_mul(u.a, v.a);
    std::int64_t bd = checked_mul(u.b, v.b);
    std::int64_t ad = checked_mul(u.a, v.b);
    std::int64_t bc = checked_mul(u.b, v.a);
    return {checked_add(ac, bd), checked_add(checked_add(ad, bc), bd)};
}

QPhi phi_pow(int n) { return {fib_a(n - 1), fib_a(n)}; }

QPhi scale(std::int64_t k, QPhi v) { return {checked_mul(k, v.a), checked_mul(k, v.b)}; }

}  // namespace fibonadic
