#pragma once

#include <cstdint>

namespace fibonadic {

// An element a + b*phi of Z[phi], phi = (1 + sqrt 5)/2.  Since phi^2 = phi + 1
// the pair (a, b) multiplies as (a,b)(c,d) = (ac + bd, ad + bc + bd), and
// phi^n = a_{n-1} + a_n phi for every integer n (signed Fibonacci a).
//
// Comparisons are exact: the sign of a + b*phi is decided by integer
// arithmetic on (2a + b)^2 versus 5 b^2, never by floating point.
struct QPhi {
    std::int64_t a = 0;  // rational part
    std::int64_t b = 0;  // coefficient of phi

    bool operator==(const QPhi&) const = default;

    // -1, 0, or +1.
    int sign() const;

    bool operator<(const QPhi& o) const;
    bool operator<=(const QPhi& o) const;
    bool operator>(const QPhi& o) const { return o < *this; }
    bool operator>=(const QPhi& o) const { return o <= *this; }

    double approx() const;
};

QPhi operator+(QPhi u, QPhi v);
QPhi operator-(QPhi u, QPhi v);
QPhi operator*(QPhi u, QPhi v);

// phi^n as an exact pair.
QPhi phi_pow(int n);

// k * v with overflow checks.
QPhi scale(std::int64_t k, QPhi v);

}  // namespace fibonadic
