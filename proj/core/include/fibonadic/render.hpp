#pragma once

#include <cstdint>
#include <string>

#include "fibonadic/configtree.hpp"
#include "fibonadic/farey.hpp"

namespace fibonadic {

// All renderers produce byte-identical output for equal inputs: integer or
// fixed-point coordinates only, fixed ordering, no timestamps.

// Indented mediant tree of the radius-r ball, lower-slope child first.
std::string render_tree_ascii(std::int64_t radius);

// Lattice plot of the ball with parent-child edges.
std::string render_tree_svg(std::int64_t radius);

// One line per vertex of a boundary path.
std::string render_boundary_text(const BoundaryPath& path);

// Configuration plot in the style of the layer figures: per-level paths in
// slope order, filled dots for plain points, double circles for markers.
std::string render_config_svg(const Config& c);

}  // namespace fibonadic
