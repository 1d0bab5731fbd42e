#pragma once

// Frozen height-2 and height-3 configurations of the first breakpoint
// words, with every point's level and marker bit.  Points are listed in
// slope order, matching Config::points.

#include <vector>

#include "fibonadic/configtree.hpp"

namespace golden {

struct Entry {
    std::int64_t x, y;
    int level;
    bool marker;
};

inline fibonadic::Config make_config(int height, const std::vector<Entry>& rows) {
    fibonadic::Config c;
    c.height = height;
    for (const Entry& e : rows) c.points.push_back({{e.x, e.y}, e.level, e.marker});
    return c;
}

// Height 2, word "1".
inline fibonadic::Config h2_first() {
    return make_config(2, {
                              {2, 1, 2, false},
                              {1, 1, 1, false},
                              {1, 2, 2, false},
                          });
}

// Height 2, word "1.01" = {0,-2}.
inline fibonadic::Config h2_second() {
    return make_config(2, {
                              {3, 1, 2, false},
                              {2, 1, 2, true},
                              {1, 1, 1, false},
                              {1, 2, 2, true},
                              {1, 3, 2, false},
                          });
}

// Height 3, word "1".
inline fibonadic::Config h3_1() {
    return make_config(3, {
                              {3, 1, 3, false},
                              {2, 1, 2, false},
                              {3, 2, 3, false},
                              {1, 1, 1, false},
                              {2, 3, 3, false},
                              {1, 2, 2, false},
                              {1, 3, 3, false},
                          });
}

// Height 3, word "1.00001" = {0,-5}.
inline fibonadic::Config h3_2() {
    return make_config(3, {
                              {4, 1, 3, false},
                              {3, 1, 3, true},
                              {2, 1, 2, false},
                              {3, 2, 3, false},
                              {1, 1, 1, false},
                              {2, 3, 3, false},
                              {1, 2, 2, false},
                              {1, 3, 3, true},
                              {1, 4, 3, false},
                          });
}

// Height 3, word "1.00101" = {0,-3,-5}.
inline fibonadic::Config h3_3() {
    return make_config(3, {
                              {5, 1, 3, false},
                              {4, 1, 3, true},
                              {3, 1, 3, true},
                              {2, 1, 2, false},
                              {3, 2, 3, false},
                              {1, 1, 1, false},
                              {2, 3, 3, false},
                              {1, 2, 2, false},
                              {1, 3, 3, true},
                              {1, 4, 3, true},
                              {1, 5, 3, false},
                          });
}

// Height 3, word "1.01" = {0,-2}.
inline fibonadic::Config h3_4() {
    return make_config(3, {
                              {5, 1, 3, false},
                              {4, 1, 3, true},
                              {3, 1, 2, false},
                              {5, 2, 3, false},
                              {2, 1, 2, true},
                              {3, 2, 3, false},
                              {1, 1, 1, false},
                              {2, 3, 3, false},
                              {1, 2, 2, true},
                              {2, 5, 3, false},
                              {1, 3, 2, false},
                              {1, 4, 3, true},
                              {1, 5, 3, false},
                          });
}

// Height 3, word "1.01001" = {0,-2,-5}.
inline fibonadic::Config h3_5() {
    return make_config(3, {
                              {5, 1, 3, false},
                              {4, 1, 3, true},
                              {3, 1, 2, false},
                              {5, 2, 3, false},
                              {2, 1, 2, true},
                              {3, 2, 3, true},
                              {4, 3, 3, false},
                              {1, 1, 1, false},
                              {3, 4, 3, false},
                              {2, 3, 3, true},
                              {1, 2, 2, true},
                              {2, 5, 3, false},
                              {1, 3, 2, false},
                              {1, 4, 3, true},
                              {1, 5, 3, false},
                          });
}

// Height 3, word "1.0101001" = {0,-2,-4,-7}.
inline fibonadic::Config h3_6() {
    return make_config(3, {
                              {6, 1, 3, false},
                              {5, 1, 3, true},
                              {4, 1, 3, true},
                              {3, 1, 2, false},
                              {5, 2, 3, false},
                              {2, 1, 2, true},
                              {3, 2, 3, true},
                              {4, 3, 3, false},
                              {1, 1, 1, false},
                              {3, 4, 3, false},
                              {2, 3, 3, true},
                              {1, 2, 2, true},
                              {2, 5, 3, false},
                              {1, 3, 2, false},
                              {1, 4, 3, true},
                              {1, 5, 3, true},
                              {1, 6, 3, false},
                          });
}

}  // namespace golden
