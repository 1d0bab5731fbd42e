#include "fibonadic/levels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fibonadic/errors.hpp"
#include "fibonadic/fib.hpp"

namespace fibonadic {

PointSet layer(int n, std::int64_t r) {
    if (n < 1) throw std::domain_error("layer requires n >= 1");
    int m = big_m(r);
    if (m < n + 1) throw std::domain_error("layer requires big_m(r) >= n + 1");
    PointSet outer = ball_c_n(r, m - n - 1);
    PointSet inner = ball_c_n(r, m - n);
    PointSet out;
    std::set_difference(outer.begin(), outer.end(), inner.begin(), inner.end(),
                        std::back_inserter(out), slope_less);
    return out;
}

namespace {

// m - 1 - kmax at a fixed coherence stage, or -1 while |v| still exceeds
// the stage radius.
int level_at_stage(std::int64_t mother_norm, std::int64_t v_norm, std::int64_t radius, int m) {
    if (v_norm > radius) return -1;
    std::int64_t prev = mother_norm;  // |v|_{-1}
    std::int64_t cur = v_norm;        // |v|_0
    int k = 0;
    while (true) {
        std::int64_t next = cur + prev;  // stays below 2 * radius before the exit
        if (next > radius) break;
        prev = cur;
        cur = next;
        ++k;
    }
    return m - 1 - k;
}

}  // namespace

int level_function(const ZeckWord& z, LatticePoint v) {
    if (!z.principal()) throw std::domain_error("level_function requires a principal word");
    Genealogy g = genealogy(v);
    std::int64_t mn = norm(g.mother);
    std::int64_t nv = norm(v);
    std::int64_t nv2 = nv * nv;
    // Stage start: comfortably past log_phi |v|^2, then grow until two
    // consecutive stages agree and the certifying bound holds.
    int m = 18 + 2 * static_cast<int>(std::ceil(std::log(static_cast<double>(nv) + 1.0) /
                                                 std::log((1.0 + std::sqrt(5.0)) / 2.0)));
    while (true) {
        if (m > 85) throw capacity_error("level_function stage exceeded the 64-bit range");
        int l1 = level_at_stage(mn, nv, coherent(z, m), m);
        int l2 = level_at_stage(mn, nv, coherent(z, m + 1), m + 1);
        if (l1 >= 1 && l1 == l2 && fib(m - l1) > nv2) return l1;
        m *= 2;
    }
}

PointSet z_set(const ZeckWord& z, std::int64_t bound) {
    PointSet out;
    for (LatticePoint v : ball_c(bound)) {
        int lv = level_function(z, v);
        if (level_function(z, v + father(v)) == lv) out.push_back(v);
    }
    return out;
}

}  // namespace fibonadic
