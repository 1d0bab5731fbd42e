#include "fibonadic/render.hpp"

#include <algorithm>
#include <map>

#include "fibonadic/textio.hpp"

namespace fibonadic {

namespace {

void tree_ascii_walk(LatticePoint v, std::int64_t radius, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(2 * depth), ' ');
    out += point_to_text(v);
    out += "\n";
    Genealogy g = genealogy(v);
    LatticePoint lower = v + g.father, upper = v + g.mother;
    if (slope_less(upper, lower)) std::swap(lower, upper);
    if (norm(lower) <= radius) tree_ascii_walk(lower, radius, depth + 1, out);
    if (norm(upper) <= radius) tree_ascii_walk(upper, radius, depth + 1, out);
}

std::string svg_open(int width, int height) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
}

}  // namespace

std::string render_tree_ascii(std::int64_t radius) {
    std::string out;
    if (radius >= 2) tree_ascii_walk({1, 1}, radius, 0, out);
    return out;
}

std::string render_tree_svg(std::int64_t radius) {
    const int scale = 32, margin = 40, dot = 4;
    PointSet ball = ball_c(radius);
    std::int64_t maxc = 1;
    for (LatticePoint v : ball) maxc = std::max({maxc, v.x, v.y});
    int side = margin * 2 + static_cast<int>(maxc) * scale;
    auto px = [&](std::int64_t x) { return margin + static_cast<int>(x) * scale; };
    auto py = [&](std::int64_t y) { return side - margin - static_cast<int>(y) * scale; };
    std::string s = svg_open(side, side);
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // Axes through the origin cell.
    s += "<line x1=\"" + std::to_string(px(0)) + "\" y1=\"" + std::to_string(py(0)) +
         "\" x2=\"" + std::to_string(px(maxc)) + "\" y2=\"" + std::to_string(py(0)) +
         "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + std::to_string(px(0)) + "\" y1=\"" + std::to_string(py(0)) +
         "\" x2=\"" + std::to_string(px(0)) + "\" y2=\"" + std::to_string(py(maxc)) +
         "\" stroke=\"black\"/>\n";
    for (LatticePoint v : ball) {
        Genealogy g = genealogy(v);
        for (LatticePoint child : {v + g.mother, v + g.father}) {
            if (norm(child) > radius) continue;
            s += "<line x1=\"" + std::to_string(px(v.x)) + "\" y1=\"" + std::to_string(py(v.y)) +
                 "\" x2=\"" + std::to_string(px(child.x)) + "\" y2=\"" +
                 std::to_string(py(child.y)) + "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
        }
    }
    for (LatticePoint v : ball) {
        s += "<circle cx=\"" + std::to_string(px(v.x)) + "\" cy=\"" + std::to_string(py(v.y)) +
             "\" r=\"" + std::to_string(dot) + "\" fill=\"black\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

std::string render_boundary_text(const BoundaryPath& path) {
    std::string out;
    for (LatticePoint v : path.vertices) {
        if (v == kZeroVertex)
            out += "0 = (1,0)\n";
        else if (v == kInfVertex)
            out += "inf = (0,1)\n";
        else
            out += point_to_text(v) + "\n";
    }
    return out;
}

std::string render_config_svg(const Config& c) {
    const int scale = 44, margin = 50;
    std::int64_t maxc = 1;
    for (const ConfigPoint& p : c.points) maxc = std::max({maxc, p.v.x, p.v.y});
    maxc += 1;
    int side = margin * 2 + static_cast<int>(maxc) * scale;
    auto px = [&](std::int64_t x) { return margin + static_cast<int>(x) * scale; };
    auto py = [&](std::int64_t y) { return side - margin - static_cast<int>(y) * scale; };
    std::string s = svg_open(side, side);
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<line x1=\"" + std::to_string(px(0)) + "\" y1=\"" + std::to_string(py(0)) +
         "\" x2=\"" + std::to_string(px(maxc)) + "\" y2=\"" + std::to_string(py(0)) +
         "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    s += "<line x1=\"" + std::to_string(px(0)) + "\" y1=\"" + std::to_string(py(0)) +
         "\" x2=\"" + std::to_string(px(0)) + "\" y2=\"" + std::to_string(py(maxc)) +
         "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (std::int64_t t = 1; t < maxc; ++t) {
        s += "<text x=\"" + std::to_string(px(t) - 4) + "\" y=\"" + std::to_string(py(0) + 24) +
             "\" font-family=\"serif\" font-size=\"16\">" + std::to_string(t) + "</text>\n";
        s += "<text x=\"" + std::to_string(px(0) - 24) + "\" y=\"" + std::to_string(py(t) + 6) +
             "\" font-family=\"serif\" font-size=\"16\">" + std::to_string(t) + "</text>\n";
    }
    // One slope-ordered path per level above 1.
    std::map<int, std::vector<LatticePoint>> rows;
    for (const ConfigPoint& p : c.points) rows[p.level].push_back(p.v);
    for (auto& [level, pts] : rows) {
        if (level < 2 || pts.size() < 2) continue;
        std::string d;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            d += (i == 0 ? "M" : " L");
            d += std::to_string(px(pts[i].x)) + " " + std::to_string(py(pts[i].y));
        }
        s += "<path d=\"" + d + "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (const ConfigPoint& p : c.points) {
        std::string cx = std::to_string(px(p.v.x)), cy = std::to_string(py(p.v.y));
        if (p.marker) {
            s += "<circle cx=\"" + cx + "\" cy=\"" + cy +
                 "\" r=\"8\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
            s += "<circle cx=\"" + cx + "\" cy=\"" + cy +
                 "\" r=\"4\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        } else {
            s += "<circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"5\" fill=\"black\"/>\n";
        }
    }
    s += "</svg>\n";
    return s;
}

}  // namespace fibonadic
