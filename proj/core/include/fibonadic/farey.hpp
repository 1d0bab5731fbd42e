#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace fibonadic {

// A point of the positive coprime lattice, or one of the two boundary
// vertices 0 = (1,0) and inf = (0,1).  |v| = x + y.
struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    bool operator==(const LatticePoint&) const = default;
};

inline constexpr LatticePoint kZeroVertex{1, 0};
inline constexpr LatticePoint kInfVertex{0, 1};

inline std::int64_t norm(LatticePoint v) { return v.x + v.y; }
inline LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }

// Strict slope order y/x, placing (1,0) first and (0,1) last.
bool slope_less(LatticePoint a, LatticePoint b);

// The two mediant summands of v: v = mother + father with mother the longer
// one.  The root (1,1) takes mother (0,1), father (1,0) by convention; the
// norms tie only there.
struct Genealogy {
    LatticePoint mother;
    LatticePoint father;
};

// Reconstructs the summands by descending the mediant tree.  Requires
// coprime x, y >= 1.
Genealogy genealogy(LatticePoint v);
LatticePoint mother(LatticePoint v);
LatticePoint father(LatticePoint v);

// Steps from (1,1) down to v in the mediant tree.
int tree_depth(LatticePoint v);

// Slope-sorted set of distinct lattice points.
using PointSet = std::vector<LatticePoint>;

bool contains(const PointSet& c, LatticePoint v);

// All coprime positive points with |v| <= r.
PointSet ball_c(std::int64_t r);

// |v|_n = a_{n+2} |mother| + a_{n+1} |father|: the norm of the deepest
// all-mother descendant n generations below v.  |v|_0 = |v| and
// |v|_{k+1} = |v|_k + |v|_{k-1}.  Requires n >= 0.
std::int64_t weighted_norm(LatticePoint v, int n);

// {v : |v|_n <= r}: the n-fold branch core of the ball, computed by the
// weighted-norm characterization.
PointSet ball_c_n(std::int64_t r, int n);

// Points of c whose both children stay in c.
PointSet branch_core(const PointSet& c);

// The boundary path of a finite subtree: 0, the points of c in slope
// order, inf.  Consecutive vertices must be unimodular
// (x_i y_{i+1} - y_i x_{i+1} = 1); a violation means c was not a subtree
// and raises std::domain_error.
struct BoundaryPath {
    std::vector<LatticePoint> vertices;
    bool operator==(const BoundaryPath&) const = default;
};

BoundaryPath boundary(const PointSet& c);

// One refinement step of a boundary edge [left, right]: lambda encodes the
// inserted fan.
//
//   lambda > 0:  left + k*right for k = 1 .. lambda+1
//   lambda = 0:  the mediant alone
//   lambda < 0:  right + k*left for k = 1 .. |lambda|+1
//   absent:      nothing inserted (tolerated and counted, never produced by
//                a strict refinement)
//
// A single insertion is reported as lambda = 0.
struct DnaStep {
    std::optional<int> lambda;
    LatticePoint left;
    LatticePoint right;
    bool operator==(const DnaStep&) const = default;
};

// Reads the steps that refine the boundary of ball_c_n(r, n+1) into the
// boundary of ball_c_n(r, n).  An insertion pattern matching no fan shape
// raises structure_error.
std::vector<DnaStep> extract_dna(std::int64_t r, int n);

// Applies steps to a path.  steps must align with the path's consecutive
// pairs (an empty list is the identity); misalignment raises
// std::domain_error.
BoundaryPath insert_dna(const BoundaryPath& path, const std::vector<DnaStep>& steps);

}  // namespace fibonadic
