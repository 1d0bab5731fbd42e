#include "fibonadic/normalize.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibonadic/errors.hpp"

namespace fibonadic {

namespace {

void require_finite(const NatSeries& s, const char* who) {
    if (s.tailed()) throw std::domain_error(std::string(who) + " requires a finite series");
}

}  // namespace

NatSeries move_a(NatSeries s, int n) {
    require_finite(s, "move_a");
    if (s.coeff(n + 1) != 0 || s.coeff(n) < 1 || s.coeff(n - 1) < 1)
        throw std::domain_error("move_a preconditions fail at " + std::to_string(n));
    s.add_at(n + 1, 1);
    s.add_at(n, -1);
    s.add_at(n - 1, -1);
    return s;
}

NatSeries move_b(NatSeries s, int n) {
    require_finite(s, "move_b");
    if (s.coeff(n + 1) != 0 || s.coeff(n) < 2 || s.coeff(n - 1) != 0)
        throw std::domain_error("move_b preconditions fail at " + std::to_string(n));
    s.add_at(n + 1, 1);
    s.add_at(n, -2);
    s.add_at(n - 2, 1);
    return s;
}

bool ok_above(const NatSeries& s, int n) {
    for (auto [m, k] : s.terms()) {
        if (m <= n) continue;
        if (s.coeff(m) != 1) return false;
        if (m - 1 > n && s.coeff(m - 1) != 0) return false;
        if (s.coeff(m + 1) != 0) return false;
    }
    // Tail digits above n are 0/1 and non-adjacent among themselves; any
    // collision with an explicit term was caught by the scans above.
    return true;
}

namespace {

// Highest index with an applicable move, or nullopt when the series is
// admissible.  At the highest violated index exactly one move applies, so
// the schedule is deterministic.
enum class Move { A, B };

std::optional<std::pair<int, Move>> find_move(const NatSeries& s) {
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
        int n = it->first;
        if (s.coeff(n + 1) != 0) continue;
        if (s.coeff(n) >= 1 && s.coeff(n - 1) >= 1) return {{n, Move::A}};
        if (s.coeff(n) >= 2 && s.coeff(n - 1) == 0) return {{n, Move::B}};
    }
    return std::nullopt;
}

NatSeries run_schedule(NatSeries s, std::uint64_t budget, bool (*done)(const NatSeries&, int),
                       int depth) {
    s.fold_tail();
    std::uint64_t moves = 0;
    while (!done(s, depth)) {
        auto mv = find_move(s);
        if (!mv) break;
        if (++moves > budget)
            throw budget_error("normalization exceeded its move budget of " +
                               std::to_string(budget));
        s = mv->second == Move::A ? move_a(std::move(s), mv->first)
                                  : move_b(std::move(s), mv->first);
    }
    return s;
}

bool done_above(const NatSeries& s, int n) { return ok_above(s, n); }
bool done_admissible(const NatSeries& s, int) { return s.admissible(); }

}  // namespace

NatSeries normalize_to_depth(NatSeries s, int n, std::uint64_t budget) {
    return run_schedule(std::move(s), budget, &done_above, n);
}

ZeckWord project(const NatSeries& s, std::uint64_t budget) {
    NatSeries r = run_schedule(s, budget, &done_admissible, 0);
    auto w = r.as_admissible_word();
    if (!w) throw structure_error("projection stopped on a non-admissible series");
    return *w;
}

ZeckWord greedy_expand(QPhi v, int max_digits) {
    if (v.sign() < 0) throw std::domain_error("greedy_expand requires a nonnegative value");
    std::vector<int> digits;
    QPhi r = v;
    int prev = 0;
    while (r.sign() > 0) {
        if (static_cast<int>(digits.size()) >= max_digits)
            throw std::domain_error("value admits no finite digit expansion within budget");
        // Largest n with phi^n <= r: float estimate, then exact adjustment.
        // The estimate may be wrecked by cancellation, so clamp before the
        // exact loops take over.
        double x = r.approx();
        int n = x > 1e-9
                    ? static_cast<int>(
                          std::floor(std::log(x) / std::log((1.0 + std::sqrt(5.0)) / 2.0)))
                    : -64;
        n = std::max(-96, std::min(96, n));
        while (!(phi_pow(n + 1) > r)) ++n;
        while (phi_pow(n) > r) --n;
        if (!digits.empty() && n > prev - 2)
            throw structure_error("greedy digits violate the gap invariant");
        digits.push_back(n);
        prev = n;
        r = r - phi_pow(n);
    }
    return ZeckWord::with_tail(std::move(digits), std::nullopt);
}

}  // namespace fibonadic
