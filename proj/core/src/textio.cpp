#include "fibonadic/textio.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "fibonadic/errors.hpp"

namespace fibonadic {

std::string word_to_text(const ZeckWord& z) {
    if (z.is_zero()) return "0";
    std::vector<int> ones = z.ones();
    std::optional<int> tail = z.tail_start();
    // Push a nonnegative tail head into explicit digits so '~' prints in
    // the fractional part.
    while (tail && *tail >= 0) {
        ones.push_back(*tail);
        tail = *tail - 2;
    }
    std::sort(ones.begin(), ones.end(), std::greater<int>());
    int hi = std::max(ones.empty() ? 0 : ones.front(), 0);
    int lo = tail ? *tail : std::min(ones.empty() ? 0 : ones.back(), 0);
    std::string out;
    for (int n = hi; n >= lo; --n) {
        if (n == -1) out.push_back('.');
        if (tail && n == *tail)
            out.push_back('~');
        else
            out.push_back(std::binary_search(ones.begin(), ones.end(), n, std::greater<int>())
                              ? '1'
                              : '0');
    }
    return out;
}

ZeckWord parse_word(const std::string& text) {
    if (text.empty()) throw parse_error("empty word text");
    std::size_t dot = text.find('.');
    if (dot != std::string::npos && text.find('.', dot + 1) != std::string::npos)
        throw parse_error("word text has more than one '.'");
    std::string intpart = dot == std::string::npos ? text : text.substr(0, dot);
    std::string fracpart = dot == std::string::npos ? "" : text.substr(dot + 1);
    std::vector<int> ones;
    std::optional<int> tail;
    auto take = [&](char ch, int index, bool last) {
        if (ch == '1') {
            ones.push_back(index);
        } else if (ch == '~') {
            if (!last) throw parse_error("'~' must be the final character");
            tail = index;
        } else if (ch != '0') {
            throw parse_error(std::string("bad character '") + ch + "' in word text");
        }
    };
    int ilen = static_cast<int>(intpart.size());
    for (int i = 0; i < ilen; ++i) {
        bool last = fracpart.empty() && i + 1 == ilen;
        take(intpart[static_cast<std::size_t>(i)], ilen - 1 - i, last);
    }
    for (int i = 0; i < static_cast<int>(fracpart.size()); ++i) {
        bool last = i + 1 == static_cast<int>(fracpart.size());
        take(fracpart[static_cast<std::size_t>(i)], -1 - i, last);
    }
    if (ones.empty() && !tail && intpart.empty() && fracpart.empty())
        throw parse_error("empty word text");
    try {
        return ZeckWord::with_tail(std::move(ones), tail);
    } catch (const std::domain_error& e) {
        throw parse_error(std::string("inadmissible word text: ") + e.what());
    }
}

std::string series_to_text(const NatSeries& s) {
    if (s.empty()) return "0";
    std::string out;
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
        if (!out.empty()) out += ",";
        out += std::to_string(it->second) + "@" + std::to_string(it->first);
    }
    if (auto t = s.tail_start()) {
        if (!out.empty()) out += ",";
        out += "~@" + std::to_string(*t);
    }
    return out;
}

namespace {

long long parse_ll(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw parse_error("");
        return v;
    } catch (...) {
        throw parse_error(std::string("bad ") + what + " '" + s + "'");
    }
}

}  // namespace

NatSeries parse_series(const std::string& text) {
    if (text.empty()) throw parse_error("empty series text");
    if (text == "0") return {};
    NatSeries s;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string term =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        std::size_t at = term.find('@');
        if (at == std::string::npos) throw parse_error("series term '" + term + "' has no '@'");
        std::string head = term.substr(0, at);
        long long index = parse_ll(term.substr(at + 1), "series index");
        if (head == "~") {
            if (s.tailed()) throw parse_error("series text has two tails");
            s.set_tail(static_cast<int>(index));
        } else {
            long long coeff = parse_ll(head, "series coefficient");
            if (coeff < 0) throw parse_error("negative series coefficient");
            s.add_at(static_cast<int>(index), coeff);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return s;
}

std::string qphi_to_text(QPhi v) {
    return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

std::string approx_to_text(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8f", x);
    std::string s = buf;
    std::size_t last = s.find_last_not_of('0');
    if (s[last] == '.') ++last;  // keep one fractional digit
    return s.substr(0, last + 1);
}

std::string point_to_text(LatticePoint v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

namespace {

nlohmann::ordered_json word_json(const ZeckWord& z) {
    nlohmann::ordered_json j;
    j["ones"] = z.ones();
    if (auto t = z.tail_start())
        j["tail"] = *t;
    else
        j["tail"] = nullptr;
    return j;
}

nlohmann::ordered_json config_json(const Config& c) {
    nlohmann::ordered_json j;
    j["height"] = c.height;
    auto points = nlohmann::ordered_json::array();
    for (const ConfigPoint& p : c.points) {
        points.push_back({{"x", p.v.x}, {"y", p.v.y}, {"level", p.level}, {"marker", p.marker}});
    }
    j["points"] = points;
    return j;
}

}  // namespace

std::string word_to_json(const ZeckWord& z) { return word_json(z).dump(); }
std::string config_to_json(const Config& c) { return config_json(c).dump(); }

std::string tree_to_json(std::int64_t radius) {
    PointSet ball = ball_c(radius);
    nlohmann::ordered_json j;
    j["radius"] = radius;
    auto points = nlohmann::ordered_json::array();
    for (LatticePoint v : ball) points.push_back({{"x", v.x}, {"y", v.y}});
    j["points"] = points;
    auto edges = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < ball.size(); ++i) {
        Genealogy g = genealogy(ball[i]);
        for (LatticePoint child : {ball[i] + g.mother, ball[i] + g.father}) {
            auto it = std::lower_bound(ball.begin(), ball.end(), child, slope_less);
            if (it != ball.end() && *it == child)
                edges.push_back({static_cast<int>(i), static_cast<int>(it - ball.begin())});
        }
    }
    j["edges"] = edges;
    return j.dump(2);
}

std::string configs_to_json(int depth) {
    nlohmann::ordered_json j;
    j["depth"] = depth;
    auto levels = nlohmann::ordered_json::array();
    std::vector<std::vector<ConfigEntry>> per_height;
    for (int h = 1; h <= depth; ++h) per_height.push_back(enumerate_configs(h));
    for (int h = 1; h <= depth; ++h) {
        const auto& entries = per_height[static_cast<std::size_t>(h - 1)];
        nlohmann::ordered_json level;
        level["height"] = h;
        auto arr = nlohmann::ordered_json::array();
        for (const ConfigEntry& e : entries) {
            nlohmann::ordered_json one;
            one["breakpoint"] = word_json(e.breakpoint.word);
            one["breakpoint_text"] = word_to_text(e.breakpoint.word);
            one["config"] = config_json(e.config);
            if (h > 1) {
                // Tree edge: the parent is the entry of height h-1 whose
                // configuration equals this one restricted.
                Config r = restrict_config(e.config);
                const auto& up = per_height[static_cast<std::size_t>(h - 2)];
                int parent = -1;
                for (std::size_t k = 0; k < up.size(); ++k)
                    if (up[k].config == r) {
                        parent = static_cast<int>(k);
                        break;
                    }
                one["parent"] = parent;
            }
            arr.push_back(one);
        }
        level["entries"] = arr;
        levels.push_back(level);
    }
    j["levels"] = levels;
    return j.dump(2);
}

}  // namespace fibonadic
