// Command-line front end.
//
// Exit codes: 0 success, 2 parse error, 3 domain/capacity error, 4 budget
// exhausted.  FIBONADIC_BUDGET overrides the normalization move budget.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fibonadic/configtree.hpp"
#include "fibonadic/errors.hpp"
#include "fibonadic/farey.hpp"
#include "fibonadic/fib.hpp"
#include "fibonadic/levels.hpp"
#include "fibonadic/normalize.hpp"
#include "fibonadic/render.hpp"
#include "fibonadic/rig.hpp"
#include "fibonadic/textio.hpp"
#include "fibonadic/word.hpp"

namespace {

using namespace fibonadic;

std::uint64_t move_budget() {
    const char* env = std::getenv("FIBONADIC_BUDGET");
    if (!env) return kDefaultMoveBudget;
    std::string s = env;
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(s, &used);
        if (used != s.size() || v == 0) throw parse_error("");
        return v;
    } catch (...) {
        throw parse_error("FIBONADIC_BUDGET must be a positive integer, got '" + s + "'");
    }
}

std::string index_set_text(const ZeckIndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.indices().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.indices()[i]);
    }
    return out + "}";
}

void cmd_zeck(std::int64_t r) {
    ZeckIndexSet s = zeck(r);
    std::vector<int> ones(s.indices().begin(), s.indices().end());
    ZeckWord w = ZeckWord::with_tail(std::move(ones), std::nullopt);
    std::cout << "indices=" << index_set_text(s) << " word=" << word_to_text(w) << "\n";
}

void cmd_dna(std::int64_t r, int n) {
    auto steps = extract_dna(r, n);
    int empty = 0;
    for (const DnaStep& st : steps) {
        std::cout << point_to_text(st.left) << " -> " << point_to_text(st.right) << "  lambda=";
        if (st.lambda) {
            std::cout << *st.lambda;
        } else {
            std::cout << "none";
            ++empty;
        }
        std::cout << "\n";
    }
    BoundaryPath coarse = boundary(ball_c_n(r, n + 1));
    BoundaryPath fine = boundary(ball_c_n(r, n));
    std::cout << "roundtrip=" << (insert_dna(coarse, steps) == fine ? "ok" : "MISMATCH")
              << " empty_steps=" << empty << "\n";
}

void cmd_layers(const std::string& ztext, int depth, std::int64_t bound) {
    ZeckWord z = parse_word(ztext);
    for (int n = 1; n <= depth; ++n) {
        std::cout << "layer " << n << ":";
        for (LatticePoint v : ball_c(bound))
            if (level_function(z, v) == n) std::cout << " " << point_to_text(v);
        std::cout << "\n";
    }
}

void cmd_configs(int depth, const std::string& render_dir, const std::string& format) {
    if (format == "json") {
        std::cout << configs_to_json(depth) << "\n";
    } else {
        auto entries = enumerate_configs(depth);
        for (const ConfigEntry& e : entries) {
            std::cout << e.breakpoint.index << ": breakpoint=" << word_to_text(e.breakpoint.word)
                      << " points=" << e.config.points.size()
                      << " markers=" << e.config.marker_count() << "\n";
        }
    }
    if (!render_dir.empty()) {
        std::filesystem::create_directories(render_dir);
        auto entries = enumerate_configs(depth);
        for (const ConfigEntry& e : entries) {
            std::string name = "config_" + std::to_string(depth) + "_" +
                               std::to_string(e.breakpoint.index) + ".svg";
            std::ofstream out(std::filesystem::path(render_dir) / name, std::ios::binary);
            out << render_config_svg(e.config);
        }
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact arithmetic and layer geometry of Fibonadic numbers"};
    app.require_subcommand(1);
    std::uint64_t budget = move_budget();

    std::int64_t r = 0, x = 0, y = 0, bound = 8;
    int n = 0, k = 0, depth = 1;
    std::string w1, w2, stext, ztext, fmt = "ascii", render_dir, which;

    auto* zeck_cmd = app.add_subcommand("zeck", "Zeckendorf index set of a natural");
    zeck_cmd->add_option("r", r, "natural number")->required();
    zeck_cmd->callback([&] { cmd_zeck(r); });

    auto* pi_cmd = app.add_subcommand("pi", "digit shift down");
    pi_cmd->add_option("r", r)->required();
    pi_cmd->callback([&] { std::cout << pi_shift(r) << "\n"; });

    auto* j_cmd = app.add_subcommand("j", "digit shift up");
    j_cmd->add_option("r", r)->required();
    j_cmd->callback([&] { std::cout << j_shift(r) << "\n"; });

    auto* cb_cmd = app.add_subcommand("cobound", "additivity defect of a shift");
    cb_cmd->add_option("shift", which, "pi or j")->required()->check(CLI::IsMember({"pi", "j"}));
    cb_cmd->add_option("x", x)->required();
    cb_cmd->add_option("y", y)->required();
    cb_cmd->callback([&] {
        std::cout << (which == "pi" ? coboundary_pi(x, y) : coboundary_j(x, y)) << "\n";
    });

    auto* norm_cmd = app.add_subcommand("normalize", "project a coefficient series to its word");
    norm_cmd->add_option("series", stext, "e.g. 2@0 or 1@1,1@0,3@-2 or 1@3,~@-1")->required();
    norm_cmd->callback([&] { std::cout << word_to_text(project(parse_series(stext), budget)) << "\n"; });

    auto* add_cmd = app.add_subcommand("add", "rig sum of two words");
    add_cmd->add_option("w1", w1)->required();
    add_cmd->add_option("w2", w2)->required();
    add_cmd->callback(
        [&] { std::cout << word_to_text(add(parse_word(w1), parse_word(w2), budget)) << "\n"; });

    auto* mul_cmd = app.add_subcommand("mul", "rig product of two words");
    mul_cmd->add_option("w1", w1)->required();
    mul_cmd->add_option("w2", w2)->required();
    mul_cmd->callback(
        [&] { std::cout << word_to_text(mul(parse_word(w1), parse_word(w2), budget)) << "\n"; });

    auto* minus_cmd = app.add_subcommand("minus", "predecessor form of a finite word");
    minus_cmd->add_option("w", w1)->required();
    minus_cmd->callback([&] { std::cout << word_to_text(minus_form(parse_word(w1))) << "\n"; });

    auto* shift_cmd = app.add_subcommand("shift", "digit translation by k");
    shift_cmd->add_option("w", w1)->required();
    shift_cmd->add_option("k", k)->required();
    shift_cmd->callback([&] { std::cout << word_to_text(shift(parse_word(w1), k)) << "\n"; });

    auto* value_cmd = app.add_subcommand("value", "exact phi-value of a word");
    value_cmd->add_option("w", w1)->required();
    value_cmd->callback([&] {
        QPhi v = phi_value(parse_word(w1));
        std::cout << qphi_to_text(v) << " = " << approx_to_text(v.approx()) << "\n";
    });

    auto* cmp_cmd = app.add_subcommand("cmp", "digit order of two words");
    cmp_cmd->add_option("w1", w1)->required();
    cmp_cmd->add_option("w2", w2)->required();
    cmp_cmd->callback([&] {
        ZeckWord a = parse_word(w1), b = parse_word(w2);
        std::cout << (a == b ? "=" : (a < b ? "<" : ">")) << "\n";
    });

    auto* dist_cmd = app.add_subcommand("dist", "valuation distance of two words");
    dist_cmd->add_option("w1", w1)->required();
    dist_cmd->add_option("w2", w2)->required();
    dist_cmd->callback([&] {
        PhiDist d = dist(parse_word(w1), parse_word(w2));
        if (d.zero())
            std::cout << "0\n";
        else
            std::cout << "phi^" << *d.exponent << "\n";
    });

    auto* tree_cmd = app.add_subcommand("tree", "the mediant tree ball of a radius");
    tree_cmd->add_option("--radius", r)->required();
    tree_cmd->add_option("--format", fmt)->check(CLI::IsMember({"ascii", "svg", "json"}));
    tree_cmd->callback([&] {
        if (fmt == "svg")
            std::cout << render_tree_svg(r);
        else if (fmt == "json")
            std::cout << tree_to_json(r) << "\n";
        else
            std::cout << render_tree_ascii(r);
    });

    auto* bd_cmd = app.add_subcommand("boundary", "boundary path of an iterated branch core");
    bd_cmd->add_option("--radius", r)->required();
    bd_cmd->add_option("--level", n)->required();
    bd_cmd->callback([&] { std::cout << render_boundary_text(boundary(ball_c_n(r, n))); });

    auto* dna_cmd = app.add_subcommand("dna", "refinement step descriptors at a level");
    dna_cmd->add_option("--radius", r)->required();
    dna_cmd->add_option("--level", n)->required();
    dna_cmd->callback([&] { cmd_dna(r, n); });

    auto* layers_cmd = app.add_subcommand("layers", "layer decomposition of a principal word");
    layers_cmd->add_option("--z", ztext)->required();
    layers_cmd->add_option("--depth", depth)->required();
    layers_cmd->add_option("--bound", bound, "norm window (default 8)");
    layers_cmd->callback([&] { cmd_layers(ztext, depth, bound); });

    auto* cfg_cmd = app.add_subcommand("configs", "enumerate height-n configurations");
    cfg_cmd->add_option("--depth", depth)->required();
    cfg_cmd->add_option("--render", render_dir, "write one SVG per configuration here");
    cfg_cmd->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));
    cfg_cmd->callback([&] { cmd_configs(depth, render_dir, fmt == "json" ? "json" : "text"); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fibonadic::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const fibonadic::budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 4;
    } catch (const fibonadic::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
