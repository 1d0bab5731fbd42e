#pragma once

#include <vector>

#include "fibonadic/farey.hpp"
#include "fibonadic/levels.hpp"
#include "fibonadic/word.hpp"

namespace fibonadic {

struct ConfigPoint {
    LatticePoint v;
    int level = 0;
    bool marker = false;  // father-side child keeps the level
    bool operator==(const ConfigPoint&) const = default;
};

// The height-n configuration of a principal word: every point of level
// <= n with its level and marker bit, slope-sorted.  Equality of the
// (point, level) data determines the markers, but they are stored so a
// Config is self-contained.
struct Config {
    int height = 0;
    std::vector<ConfigPoint> points;
    bool operator==(const Config&) const = default;

    PointSet base() const;
    std::size_t marker_count() const;
};

// Computes the configuration by walking the mediant tree from (1,1),
// pruning where the level exceeds n (levels never decrease downward).
// Requires z principal and n >= 1.
Config config_of(const ZeckWord& z, int n);

// Drops the top level.  Requires height >= 2.
Config restrict_config(const Config& c);

// a <= b in the restriction order: after j restrictions the base of a
// is contained in the base of b, for every j.  Heights must agree.
bool tree_order_leq(const Config& a, const Config& b);

// A left endpoint of a maximal constant-configuration interval of the
// principal class, with its position in the slope of breakpoints.
struct Breakpoint {
    ZeckWord word;
    int index = 0;
    bool operator==(const Breakpoint&) const = default;
};

struct ConfigEntry {
    Breakpoint breakpoint;
    Config config;
};

// All height-n configurations in order: splits the binary prefix tree of
// the principal class until the all-zeros and tail completions of a prefix
// agree, then merges adjacent intervals carrying equal configurations.
// Prefixes deeper than 4n + 8 digits raise budget_error.
std::vector<ConfigEntry> enumerate_configs(int n);

// Every level-(n-1) breakpoint survives at level n and every level-n
// interval refines a level-(n-1) one.  Requires n >= 2.
bool breakpoint_nesting(int n);

}  // namespace fibonadic
