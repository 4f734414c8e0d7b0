#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "storyline/bound.hpp"
#include "storyline/eventgraph.hpp"
#include "storyline/fpt_solver.hpp"
#include "storyline/generator.hpp"
#include "storyline/model.hpp"
#include "storyline/oracle.hpp"
#include "storyline/render.hpp"
#include "storyline/tree_layout.hpp"

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    if (!out) throw IoError("write failed for " + path);
}

storyline::Storyline load_storyline(const std::string& path) {
    return storyline::parse_storyline(read_file(path));
}

int resolve_root(const storyline::Storyline& s, const std::string& root) {
    for (int i = 0; i < s.character_count(); ++i) {
        if (s.characters()[i] == root) return i;
    }
    try {
        return std::stoi(root);
    } catch (const std::exception&) {
        throw storyline::ValidationError("unknown root character '" + root + "'");
    }
}

void emit(bool as_json, const json& machine, const std::string& human) {
    if (as_json) {
        std::cout << machine.dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"storyline crossing minimization toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // --- solve ---
    std::string solve_input, solve_out;
    long long solve_budget = storyline::SolveOptions{}.weight_eval_budget;
    int solve_max_k = storyline::SolveOptions{}.max_characters;
    bool solve_precompute = false;
    auto* solve = app.add_subcommand("solve", "exact minimum-crossing solver");
    solve->add_option("input", solve_input, "storyline JSON file")->required();
    solve->add_option("--budget", solve_budget, "weight-evaluation budget");
    solve->add_option("--max-k", solve_max_k, "character-count refusal threshold");
    solve->add_flag("--precompute", solve_precompute, "precompute all k!^2 pair weights");
    solve->add_option("--out", solve_out, "write the wiring diagram JSON here");

    // --- layout-tree ---
    std::string layout_input, layout_out, layout_root = "0";
    auto* layout = app.add_subcommand("layout-tree", "heavy-path tree layout");
    layout->add_option("input", layout_input, "storyline JSON file")->required();
    layout->add_option("--root", layout_root, "root character (name or index)");
    layout->add_option("--out", layout_out, "write the wiring diagram JSON here");

    // --- bound ---
    std::string bound_input;
    int bound_budget = storyline::kDefaultMlaNodeBudget;
    auto* bound_cmd = app.add_subcommand("bound", "combinatorial crossing lower bound");
    bound_cmd->add_option("input", bound_input, "storyline JSON file")->required();
    bound_cmd->add_option("--node-budget", bound_budget, "exact search node limit");

    // --- gen ---
    std::string gen_kind, gen_out;
    int gen_n = 0, gen_events = -1;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "benchmark instance generator");
    gen->add_option("kind", gen_kind, "path|star|complete-binary-tree|random-tree|random-general")
        ->required();
    gen->add_option("n", gen_n, "characters")->required();
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--events", gen_events, "event count (random-general; default 2n)");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // --- verify ---
    std::string verify_story, verify_diagram;
    auto* verify = app.add_subcommand("verify", "check a wiring diagram against a storyline");
    verify->add_option("storyline", verify_story, "storyline JSON file")->required();
    verify->add_option("diagram", verify_diagram, "diagram JSON file")->required();

    // --- render ---
    std::string render_story, render_diagram, render_svg_out;
    storyline::RenderConfig render_cfg;
    auto* render = app.add_subcommand("render", "emit an SVG drawing of a diagram");
    render->add_option("storyline", render_story, "storyline JSON file")->required();
    render->add_option("diagram", render_diagram, "diagram JSON file")->required();
    render->add_option("--svg", render_svg_out, "SVG output path")->required();
    render->add_option("--delta-group", render_cfg.delta_group, "gap inside meetings");
    render->add_option("--delta-sep", render_cfg.delta_sep, "gap between separated curves");
    render->add_option("--column-width", render_cfg.column_width, "pixels per time step");
    render->add_flag("--force", render_cfg.force, "render even if verification fails");

    // --- oracle (hidden; reproduces golden values) ---
    std::string oracle_input;
    storyline::OracleLimits oracle_limits;
    auto* oracle = app.add_subcommand("oracle", "brute-force exact minimum (test oracle)");
    oracle->group("");
    oracle->add_option("input", oracle_input, "storyline JSON file")->required();
    oracle->add_option("--max-k", oracle_limits.max_characters, "character limit");
    oracle->add_option("--max-columns", oracle_limits.max_columns, "column limit");

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) {
        const auto s = load_storyline(solve_input);
        storyline::SolveOptions opts;
        opts.weight_eval_budget = solve_budget;
        opts.max_characters = solve_max_k;
        opts.precompute_all_pairs = solve_precompute;
        const auto solution = storyline::solve_exact(s, opts);
        if (!solve_out.empty()) write_file(solve_out, diagram_to_json(solution.diagram, s));
        emit(as_json,
             {{"crossings", solution.crossings}, {"solver", storyline::to_string(solution.solver_tag)}},
             "crossings: " + std::to_string(solution.crossings) + "\n");
    } else if (layout->parsed()) {
        const auto s = load_storyline(layout_input);
        const int root = resolve_root(s, layout_root);
        const auto solution = storyline::layout_tree(s, root);
        const long long bound = storyline::tree_crossing_bound(s.character_count());
        if (!layout_out.empty()) write_file(layout_out, diagram_to_json(solution.diagram, s));
        emit(as_json,
             {{"crossings", solution.crossings},
              {"bound", bound},
              {"solver", storyline::to_string(solution.solver_tag)}},
             "crossings: " + std::to_string(solution.crossings) + "\nbound: " +
                 std::to_string(bound) + "\n");
    } else if (bound_cmd->parsed()) {
        const auto s = load_storyline(bound_input);
        const auto g = storyline::build_event_graph(s);
        const auto result = storyline::lower_bound(g, bound_budget);
        std::ostringstream human;
        human << "l_star: " << result.l_star << "\ndelta: " << result.delta
              << "\nedges: " << g.edges.size() << "\nbound: " << result.bound
              << "\nexact: " << (result.exact ? "true" : "false") << "\n";
        emit(as_json,
             {{"l_star", result.l_star},
              {"delta", result.delta},
              {"edges", g.edges.size()},
              {"bound", result.bound},
              {"exact", result.exact}},
             human.str());
    } else if (gen->parsed()) {
        storyline::Storyline s = [&] {
            if (gen_kind == "path") return storyline::generate_path(gen_n);
            if (gen_kind == "star") return storyline::generate_star(gen_n);
            if (gen_kind == "complete-binary-tree")
                return storyline::generate_complete_binary_tree(gen_n);
            if (gen_kind == "random-tree") return storyline::generate_random_tree(gen_n, gen_seed);
            if (gen_kind == "random-general") {
                const int m = gen_events >= 0 ? gen_events : 2 * gen_n;
                return storyline::generate_random_general(gen_n, m, gen_seed);
            }
            throw storyline::ValidationError("unknown generator kind '" + gen_kind + "'");
        }();
        const std::string text = storyline::serialize_storyline(s);
        if (gen_out.empty()) {
            std::cout << text;
        } else {
            write_file(gen_out, text);
        }
    } else if (verify->parsed()) {
        const auto s = load_storyline(verify_story);
        const auto d = storyline::diagram_from_json(read_file(verify_diagram), s);
        const auto result = storyline::verify_solution(s, d);
        json violations = json::array();
        std::ostringstream human;
        human << (result.valid ? "valid" : "invalid") << "\ncrossings: " << result.crossings << "\n";
        for (const auto& v : result.violations) {
            violations.push_back({{"event", v.event_index}, {"time", v.time}});
            human << "violation: event " << v.event_index << " at time " << v.time << "\n";
        }
        emit(as_json,
             {{"valid", result.valid}, {"crossings", result.crossings}, {"violations", violations}},
             human.str());
        if (!result.valid) return 1;
    } else if (render->parsed()) {
        const auto s = load_storyline(render_story);
        const auto d = storyline::diagram_from_json(read_file(render_diagram), s);
        write_file(render_svg_out, storyline::render_svg(s, d, render_cfg));
    } else if (oracle->parsed()) {
        const auto s = load_storyline(oracle_input);
        const long long best = storyline::brute_force_min_crossings(s, oracle_limits);
        emit(as_json, {{"crossings", best}}, "crossings: " + std::to_string(best) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const storyline::BudgetError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const IoError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const storyline::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
