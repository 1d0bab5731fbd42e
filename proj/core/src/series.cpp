#include "fibonadic/series.hpp"

#include <stdexcept>
#include <vector>

#include "fibonadic/checked.hpp"
#include "fibonadic/errors.hpp"

namespace fibonadic {

NatSeries NatSeries::from_word(const ZeckWord& z) {
    NatSeries s;
    for (int n : z.ones()) s.c_[n] = 1;
    s.tail_ = z.tail_start();
    return s;
}

NatSeries NatSeries::single(int index, std::int64_t coeff) {
    if (coeff < 0) throw std::domain_error("negative coefficient");
    NatSeries s;
    if (coeff > 0) s.c_[index] = coeff;
    return s;
}

std::int64_t NatSeries::coeff(int n) const {
    std::int64_t v = explicit_coeff(n);
    if (tail_ && n <= *tail_ && (*tail_ - n) % 2 == 0) v = checked_add(v, 1);
    return v;
}

std::int64_t NatSeries::explicit_coeff(int n) const {
    auto it = c_.find(n);
    return it == c_.end() ? 0 : it->second;
}

void NatSeries::add_at(int n, std::int64_t k) {
    std::int64_t v = checked_add(explicit_coeff(n), k);
    set_at(n, v);
}

void NatSeries::set_at(int n, std::int64_t k) {
    if (k < 0) throw std::domain_error("negative coefficient");
    if (k == 0)
        c_.erase(n);
    else
        c_[n] = k;
}

void NatSeries::fold_tail() {
    if (!tail_) return;
    int t = *tail_;
    tail_.reset();
    add_at(t + 1, 1);
}

NatSeries NatSeries::plus(const NatSeries& o) const {
    if (tail_ && o.tail_)
        throw std::domain_error("sum of two tailed series is not representable");
    NatSeries r = *this;
    if (o.tail_) r.tail_ = o.tail_;
    for (auto [n, k] : o.c_) r.add_at(n, k);
    return r;
}

NatSeries NatSeries::times(const NatSeries& o) const {
    if (tail_ || o.tail_) throw std::domain_error("cauchy product requires finite series");
    NatSeries r;
    for (auto [n, k] : c_)
        for (auto [m, l] : o.c_) r.add_at(n + m, checked_mul(k, l));
    return r;
}

QPhi NatSeries::phi_value() const {
    QPhi v;
    for (auto [n, k] : c_) v = v + scale(k, phi_pow(n));
    if (tail_) v = v + phi_pow(*tail_ + 1);
    return v;
}

bool NatSeries::admissible() const {
    for (auto [n, k] : c_) {
        if (coeff(n) != 1) return false;           // catches tail overlap too
        if (coeff(n + 1) != 0 || coeff(n - 1) != 0) return false;
    }
    return true;
}

std::optional<ZeckWord> NatSeries::as_admissible_word() const {
    if (!admissible()) return std::nullopt;
    std::vector<int> ones;
    for (auto [n, k] : c_) ones.push_back(n);
    return ZeckWord::with_tail(std::move(ones), tail_);
}

}  // namespace fibonadic
