#include "fibonadic/configtree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

#include "fibonadic/errors.hpp"

namespace fibonadic {

PointSet Config::base() const {
    PointSet out;
    out.reserve(points.size());
    for (const ConfigPoint& p : points) out.push_back(p.v);
    return out;
}

std::size_t Config::marker_count() const {
    std::size_t k = 0;
    for (const ConfigPoint& p : points) k += p.marker;
    return k;
}

Config config_of(const ZeckWord& z, int n) {
    if (n < 1) throw std::domain_error("config_of requires n >= 1");
    if (!z.principal()) throw std::domain_error("config_of requires a principal word");
    std::map<std::pair<std::int64_t, std::int64_t>, int> levels;
    std::deque<LatticePoint> queue;
    LatticePoint root{1, 1};
    int root_level = level_function(z, root);
    if (root_level != 1) throw structure_error("root level is not 1");
    levels[{1, 1}] = 1;
    queue.push_back(root);
    while (!queue.empty()) {
        LatticePoint v = queue.front();
        queue.pop_front();
        Genealogy g = genealogy(v);
        for (LatticePoint child : {v + g.mother, v + g.father}) {
            auto key = std::pair{child.x, child.y};
            if (levels.count(key)) continue;
            int l = level_function(z, child);
            if (l > n) continue;
            levels[key] = l;
            queue.push_back(child);
        }
    }
    Config c;
    c.height = n;
    for (auto& [key, l] : levels) {
        LatticePoint v{key.first, key.second};
        bool marker = level_function(z, v + father(v)) == l;
        c.points.push_back({v, l, marker});
    }
    std::sort(c.points.begin(), c.points.end(),
              [](const ConfigPoint& a, const ConfigPoint& b) { return slope_less(a.v, b.v); });
    return c;
}

Config restrict_config(const Config& c) {
    if (c.height < 2) throw std::domain_error("restrict_config requires height >= 2");
    Config r;
    r.height = c.height - 1;
    for (const ConfigPoint& p : c.points)
        if (p.level < c.height) r.points.push_back(p);
    return r;
}

bool tree_order_leq(const Config& a, const Config& b) {
    if (a.height != b.height) throw std::domain_error("tree_order_leq requires equal heights");
    Config x = a, y = b;
    while (true) {
        PointSet bx = x.base(), by = y.base();
        for (LatticePoint v : bx)
            if (!contains(by, v)) return false;
        if (x.height < 2) return true;
        x = restrict_config(x);
        y = restrict_config(y);
    }
}

namespace {

// A prefix fixes the digits 0 .. low; its last fixed digit is always 0, so
// the largest completion opens the tail right below.
struct Prefix {
    std::vector<int> ones;  // descending, starting with 0
    int low = -1;
};

ZeckWord min_completion(const Prefix& p) {
    return ZeckWord::with_tail(p.ones, std::nullopt);
}

ZeckWord max_completion(const Prefix& p) {
    return ZeckWord::with_tail(p.ones, p.low - 1);
}

void resolve(const Prefix& p, int cap, int n, std::vector<std::pair<ZeckWord, Config>>& out) {
    if (-p.low > cap)
        throw budget_error("prefix depth cap " + std::to_string(cap) +
                           " exhausted while separating configurations");
    ZeckWord zmin = min_completion(p);
    Config cmin = config_of(zmin, n);
    Config cmax = config_of(max_completion(p), n);
    if (cmin == cmax) {
        out.emplace_back(zmin, std::move(cmin));
        return;
    }
    // Interval not constant: refine.  The zero child first keeps the
    // enumeration in digit order.
    Prefix zero = p;
    zero.low -= 1;
    resolve(zero, cap, n, out);
    Prefix one = p;
    one.ones.push_back(p.low - 1);
    one.low -= 2;
    resolve(one, cap, n, out);
}

}  // namespace

std::vector<ConfigEntry> enumerate_configs(int n) {
    if (n < 1) throw std::domain_error("enumerate_configs requires n >= 1");
    std::vector<std::pair<ZeckWord, Config>> raw;
    Prefix root;
    root.ones = {0};
    root.low = -1;
    resolve(root, 4 * n + 8, n, raw);
    // Adjacent intervals with equal configurations belong to one piece.
    std::vector<ConfigEntry> out;
    for (auto& [w, c] : raw) {
        if (!out.empty() && out.back().config == c) continue;
        ConfigEntry e;
        e.breakpoint = {w, static_cast<int>(out.size())};
        e.config = std::move(c);
        out.push_back(std::move(e));
    }
    return out;
}

bool breakpoint_nesting(int n) {
    if (n < 2) throw std::domain_error("breakpoint_nesting requires n >= 2");
    std::vector<ConfigEntry> coarse = enumerate_configs(n - 1);
    std::vector<ConfigEntry> fine = enumerate_configs(n);
    // Every coarse breakpoint must reappear.
    for (const ConfigEntry& e : coarse) {
        bool found = false;
        for (const ConfigEntry& f : fine)
            if (f.breakpoint.word == e.breakpoint.word) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    // Each fine interval must sit inside a single coarse interval: no
    // coarse breakpoint may fall strictly inside a fine interval.
    for (std::size_t i = 0; i + 1 < fine.size(); ++i) {
        const ZeckWord& a = fine[i].breakpoint.word;
        const ZeckWord& b = fine[i + 1].breakpoint.word;
        for (const ConfigEntry& e : coarse) {
            const ZeckWord& w = e.breakpoint.word;
            if (a < w && w < b) return false;
        }
    }
    return true;
}

}  // namespace fibonadic
