#include "fibonadic/farey.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fibonadic/checked.hpp"
#include "fibonadic/errors.hpp"
#include "fibonadic/fib.hpp"

namespace fibonadic {

bool slope_less(LatticePoint a, LatticePoint b) {
    // y_a / x_a < y_b / x_b without division; norms stay far below the
    // overflow line in every caller.
    return a.y * b.x < b.y * a.x;
}

namespace {

std::string point_str(LatticePoint v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

void require_interior(LatticePoint v, const char* who) {
    if (v.x < 1 || v.y < 1)
        throw std::domain_error(std::string(who) + ": " + point_str(v) +
                                " is not a positive lattice point");
    if (std::gcd(v.x, v.y) != 1)
        throw std::domain_error(std::string(who) + ": " + point_str(v) + " is not coprime");
}

// Mediant-tree search from the root; returns the final (low, high) frame,
// which is exactly the parent pair of v.
std::pair<Genealogy, int> descend(LatticePoint v, const char* who) {
    require_interior(v, who);
    LatticePoint low = kZeroVertex, high = kInfVertex, cur{1, 1};
    int depth = 0;
    while (!(cur == v)) {
        if (slope_less(cur, v))
            low = cur;
        else
            high = cur;
        cur = low + high;
        ++depth;
    }
    Genealogy g;
    if (norm(high) >= norm(low)) {
        g.mother = high;
        g.father = low;
    } else {
        g.mother = low;
        g.father = high;
    }
    return {g, depth};
}

}  // namespace

Genealogy genealogy(LatticePoint v) { return descend(v, "genealogy").first; }
LatticePoint mother(LatticePoint v) { return genealogy(v).mother; }
LatticePoint father(LatticePoint v) { return genealogy(v).father; }
int tree_depth(LatticePoint v) { return descend(v, "tree_depth").second; }

bool contains(const PointSet& c, LatticePoint v) {
    auto it = std::lower_bound(c.begin(), c.end(), v, slope_less);
    return it != c.end() && *it == v;
}

PointSet ball_c(std::int64_t r) {
    if (r < 0) throw std::domain_error("ball_c requires r >= 0");
    PointSet out;
    for (std::int64_t x = 1; x < r; ++x)
        for (std::int64_t y = 1; x + y <= r; ++y)
            if (std::gcd(x, y) == 1) out.push_back({x, y});
    std::sort(out.begin(), out.end(), slope_less);
    return out;
}

std::int64_t weighted_norm(LatticePoint v, int n) {
    if (n < 0) throw std::domain_error("weighted_norm requires n >= 0");
    Genealogy g = genealogy(v);
    // Run the recurrence w_{k+1} = w_k + w_{k-1} from w_{-1} = |mother|,
    // w_0 = |v|; this never leaves the magnitude of the answer.
    std::int64_t prev = norm(g.mother);
    std::int64_t cur = norm(v);
    for (int k = 0; k < n; ++k) {
        std::int64_t next = checked_add(cur, prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

PointSet ball_c_n(std::int64_t r, int n) {
    if (n < 0) throw std::domain_error("ball_c_n requires n >= 0");
    PointSet out;
    for (LatticePoint v : ball_c(r)) {
        // Early-exit weighted norm: stop as soon as the recurrence passes r.
        Genealogy g = genealogy(v);
        std::int64_t prev = norm(g.mother);
        std::int64_t cur = norm(v);
        bool in = cur <= r;
        for (int k = 0; in && k < n; ++k) {
            std::int64_t next = cur + prev;  // bounded by 2r before the exit
            prev = cur;
            cur = next;
            if (cur > r) in = false;
        }
        if (in) out.push_back(v);
    }
    return out;
}

PointSet branch_core(const PointSet& c) {
    PointSet out;
    for (LatticePoint v : c) {
        Genealogy g = genealogy(v);
        if (contains(c, v + g.mother) && contains(c, v + g.father)) out.push_back(v);
    }
    return out;
}

BoundaryPath boundary(const PointSet& c) {
    BoundaryPath p;
    p.vertices.reserve(c.size() + 2);
    p.vertices.push_back(kZeroVertex);
    p.vertices.insert(p.vertices.end(), c.begin(), c.end());
    p.vertices.push_back(kInfVertex);
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        LatticePoint a = p.vertices[i], b = p.vertices[i + 1];
        if (a.x * b.y - a.y * b.x != 1)
            throw std::domain_error("boundary: consecutive pair " + point_str(a) + ", " +
                                    point_str(b) + " is not unimodular; not a subtree");
    }
    return p;
}

namespace {

std::optional<int> match_fan(LatticePoint a, LatticePoint b,
                             const std::vector<LatticePoint>& inserted) {
    int m = static_cast<int>(inserted.size());
    if (m == 0) return std::nullopt;
    auto scaled = [](LatticePoint p, int k) { return LatticePoint{p.x * k, p.y * k}; };
    if (m == 1) {
        if (inserted[0] == a + b) return 0;
        throw structure_error("single inserted vertex is not the mediant");
    }
    bool pos = true, neg = true;
    for (int i = 0; i < m; ++i) {
        if (!(inserted[i] == a + scaled(b, i + 1))) pos = false;
        if (!(inserted[i] == b + scaled(a, m - i))) neg = false;
    }
    if (pos) return m - 1;
    if (neg) return -(m - 1);
    throw structure_error("inserted vertices match no fan shape between " + point_str(a) +
                          " and " + point_str(b));
}

}  // namespace

std::vector<DnaStep> extract_dna(std::int64_t r, int n) {
    BoundaryPath coarse = boundary(ball_c_n(r, n + 1));
    BoundaryPath fine = boundary(ball_c_n(r, n));
    std::vector<DnaStep> steps;
    std::size_t j = 0;
    for (std::size_t i = 0; i + 1 < coarse.vertices.size(); ++i) {
        LatticePoint a = coarse.vertices[i], b = coarse.vertices[i + 1];
        if (!(fine.vertices[j] == a))
            throw structure_error("coarse boundary vertex " + point_str(a) +
                                  " missing from the refined boundary");
        std::vector<LatticePoint> inserted;
        ++j;
        while (j < fine.vertices.size() && !(fine.vertices[j] == b))
            inserted.push_back(fine.vertices[j++]);
        if (j >= fine.vertices.size())
            throw structure_error("coarse boundary vertex " + point_str(b) +
                                  " missing from the refined boundary");
        steps.push_back({match_fan(a, b, inserted), a, b});
    }
    return steps;
}

BoundaryPath insert_dna(const BoundaryPath& path, const std::vector<DnaStep>& steps) {
    if (steps.empty()) return path;
    if (path.vertices.size() < 2 || steps.size() != path.vertices.size() - 1)
        throw std::domain_error("insert_dna: steps do not align with the path");
    BoundaryPath out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        LatticePoint a = path.vertices[i], b = path.vertices[i + 1];
        const DnaStep& st = steps[i];
        if (!(st.left == a) || !(st.right == b))
            throw std::domain_error("insert_dna: step endpoints do not match the path");
        out.vertices.push_back(a);
        if (st.lambda) {
            int l = *st.lambda;
            if (l == 0) {
                out.vertices.push_back(a + b);
            } else if (l > 0) {
                for (int k = 1; k <= l + 1; ++k)
                    out.vertices.push_back({a.x + k * b.x, a.y + k * b.y});
            } else {
                for (int k = -l + 1; k >= 1; --k)
                    out.vertices.push_back({b.x + k * a.x, b.y + k * a.y});
            }
        }
    }
    out.vertices.push_back(path.vertices.back());
    return out;
}

}  // namespace fibonadic
