// Command-line front end: invariant reports, the verification suite, the
// example tables, and seeded move walks.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "trilink/bouquet.hpp"
#include "trilink/gauss_code.hpp"
#include "trilink/invariants.hpp"
#include "trilink/moves.hpp"
#include "trilink/tables.hpp"
#include "trilink/verify.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Inputs are either gauss codes ("link ...") or bouquet files ("bouquet").
trilink::gauss_diagram parse_input(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    in >> word;
    if (word == "bouquet") return trilink::compile_bouquet(trilink::parse_bouquet(text));
    return trilink::parse_gauss_code(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss-diagram invariants of 3-component links and bouquet tangles"};
    app.require_subcommand(1);

    std::string data_dir = TRILINK_DATA_DIR;
    app.add_option("--data", data_dir, "data directory (patterns, moves, example diagrams)");

    std::string input_path;
    std::string format = "text";
    std::string t_value;
    auto* compute = app.add_subcommand("compute", "invariant report for one diagram");
    compute->add_option("input", input_path, "gauss code or bouquet file (default stdin)");
    compute->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--t", t_value, "also report (1-t)*mu + t*mu_hat for this rational t");

    std::uint64_t seed = 1;
    int trials = 60;
    auto* verify = app.add_subcommand("verify", "run the property verification suite");
    verify->add_option("--seed", seed, "random seed (all randomness flows from this)");
    verify->add_option("--trials", trials, "base trial count")->check(CLI::PositiveNumber);

    auto* tables = app.add_subcommand("tables", "recompute example tables and diff goldens");

    int steps = 10;
    std::string walk_input;
    auto* walk = app.add_subcommand("walk", "print a seeded random move walk");
    walk->add_option("input", walk_input, "start diagram (default: empty 3-component)");
    walk->add_option("--seed", seed, "random seed");
    walk->add_option("--steps", steps, "number of moves")->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            trilink::gauss_diagram d;
            try {
                d = parse_input(read_input(input_path));
            } catch (const trilink::parse_error& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return 1;
            }
            trilink::invariant_context ctx =
                trilink::invariant_context::load(data_dir + "/patterns.txt");
            std::optional<trilink::rational> t;
            if (!t_value.empty()) t = trilink::parse_rational(t_value);
            trilink::invariant_report r;
            try {
                r = trilink::compute_report(ctx, d, t);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
            std::cout << (format == "json" ? trilink::report_to_json(r)
                                           : trilink::report_to_text(r));
            return 0;
        }

        if (verify->parsed()) {
            trilink::invariant_context ctx =
                trilink::invariant_context::load(data_dir + "/patterns.txt");
            trilink::move_table table = trilink::move_table::load_file(data_dir + "/moves.txt");
            trilink::verify_options opt;
            opt.seed = seed;
            opt.trials = trials;
            trilink::verify_summary s = trilink::run_verification(ctx, table, opt);
            std::cout << trilink::summary_to_text(s);
            return s.ok() ? 0 : 3;
        }

        if (tables->parsed()) {
            trilink::invariant_context ctx =
                trilink::invariant_context::load(data_dir + "/patterns.txt");
            auto computed = trilink::compute_tables(ctx, data_dir);
            for (const auto& [name, content] : computed)
                std::cout << "== " << name << "\n" << content << "\n";
            std::string diff = trilink::diff_against_golden(ctx, data_dir);
            if (!diff.empty()) {
                std::cerr << diff;
                return 4;
            }
            return 0;
        }

        if (walk->parsed()) {
            trilink::gauss_diagram start = walk_input.empty()
                                               ? trilink::empty_diagram(3)
                                               : parse_input(read_input(walk_input));
            trilink::move_table table = trilink::move_table::load_file(data_dir + "/moves.txt");
            std::vector<trilink::move_spec> allowed;
            for (const trilink::move_variant& v : table.all()) {
                allowed.push_back(trilink::move_spec{&v, false});
                allowed.push_back(trilink::move_spec{&v, true});
            }
            auto diagrams = trilink::random_walk(seed, steps, allowed, start, table);
            for (size_t i = 0; i < diagrams.size(); ++i) {
                std::cout << "# step " << i << "\n"
                          << trilink::serialize_gauss_code(diagrams[i]) << "\n";
            }
            return 0;
        }
    } catch (const trilink::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
