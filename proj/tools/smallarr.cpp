// Command-line front end: analyze/order/verify/equations/project for
// arrangement documents, graph-chordal/graph-froberg for graph documents,
// plus the random-instance generator and the built-in self-check.
//
// Exit codes: 0 success, 1 input or usage error, 2 for a computed "false"
// verdict on an assertion-style command (a failing order, a non-chordal
// graph, an inconsistent cross-check, a failing self-check).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smallarr/errors.hpp"
#include "smallarr/forest.hpp"
#include "smallarr/generate.hpp"
#include "smallarr/io.hpp"
#include "smallarr/selfcheck.hpp"

namespace {

using smallarr::Json;

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw smallarr::input_error("malformed index list: \"" + text + "\"");
        }
    }
    return out;
}

std::vector<smallarr::Rational> parse_point(const std::string& text) {
    std::vector<smallarr::Rational> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ','))
        out.push_back(smallarr::parse_rational(item));
    return out;
}

void emit(const Json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw smallarr::input_error("cannot write file: " + out_path);
    out << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subspace arrangement analyzer: decides smallness via the "
                 "weighted spanning-forest criterion, produces and verifies "
                 "linearly joined orderings, emits quadratic ideal generators, "
                 "and cross-validates against chordal graph theory"};
    app.require_subcommand(1);

    std::string input_path, out_path, order_text, point_text, filter;
    int component = 0, components = 0, ambient = 0;
    std::uint64_t seed = 0;
    bool run_check = false;

    auto* analyze = app.add_subcommand("analyze", "Smallness report for an arrangement file");
    analyze->add_option("file", input_path)->required();
    analyze->add_option("--out", out_path, "Write the report to a file instead of stdout");

    auto* order = app.add_subcommand("order", "Produce a linearly joined ordering");
    order->add_option("file", input_path)->required();

    auto* verify = app.add_subcommand("verify", "Verify an ordering as linearly joined");
    verify->add_option("file", input_path)->required();
    verify->add_option("--order", order_text, "Comma-separated component indices")->required();

    auto* equations = app.add_subcommand("equations", "Emit quadratic ideal generators");
    equations->add_option("file", input_path)->required();
    equations->add_option("--order", order_text, "Ordering to use (default: the computed one)");
    equations->add_flag("--check", run_check, "Verify the generators against the exact oracles");

    auto* project = app.add_subcommand("project", "Project from a point on a component");
    project->add_option("file", input_path)->required();
    project->add_option("--component", component)->required();
    project->add_option("--point", point_text, "Comma-separated coordinates")->required();

    auto* chordal_cmd = app.add_subcommand("graph-chordal", "Chordality test for a graph file");
    chordal_cmd->add_option("file", input_path)->required();

    auto* froberg_cmd = app.add_subcommand("graph-froberg",
                                           "Cross-check chordality against smallness");
    froberg_cmd->add_option("file", input_path)->required();

    auto* random_cmd = app.add_subcommand("random", "Generate a random small arrangement");
    random_cmd->add_option("--components", components)->required();
    random_cmd->add_option("--ambient", ambient)->required();
    random_cmd->add_option("--seed", seed)->required();

    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Replay the bundled model examples");
    selfcheck_cmd->add_option("--filter", filter, "Run only items whose name contains this");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            const auto arr = smallarr::load_arrangement_file(input_path);
            emit(smallarr::smallness_report_to_json(smallarr::is_small(arr)), out_path);
            return 0;
        }
        if (order->parsed()) {
            const auto arr = smallarr::load_arrangement_file(input_path);
            const auto report = smallarr::is_small(arr);
            emit(smallarr::smallness_report_to_json(report), "");
            return report.small ? 0 : 2;
        }
        if (verify->parsed()) {
            const auto arr = smallarr::load_arrangement_file(input_path);
            const auto result = smallarr::verify_linearly_joined(arr, parse_index_list(order_text));
            emit(smallarr::verify_result_to_json(result), "");
            return result.ok ? 0 : 2;
        }
        if (equations->parsed()) {
            const auto arr = smallarr::load_arrangement_file(input_path);
            std::vector<int> used_order;
            if (!order_text.empty()) {
                used_order = parse_index_list(order_text);
                if (!smallarr::verify_linearly_joined(arr, used_order).ok) {
                    std::cerr << "the given order is not linearly joined\n";
                    return 2;
                }
            } else {
                const auto report = smallarr::is_small(arr);
                if (!report.small || !report.ordering) {
                    std::cerr << "arrangement is not small; no linearly joined order exists\n";
                    return 2;
                }
                used_order = report.ordering->sequence;
            }
            const auto gens = smallarr::equations_for_ordered_arrangement(arr, used_order);
            Json doc = smallarr::generator_set_to_json(gens);
            doc["order"] = used_order;
            int exit_code = 0;
            if (run_check) {
                const auto check = smallarr::verify_generation(arr, gens);
                doc["check"] = smallarr::generation_report_to_json(check);
                exit_code = check.all_ok() ? 0 : 2;
            }
            emit(doc, "");
            return exit_code;
        }
        if (project->parsed()) {
            const auto arr = smallarr::load_arrangement_file(input_path);
            const auto result =
                smallarr::project_from_point(arr, component, parse_point(point_text));
            emit(smallarr::projection_result_to_json(result), "");
            return 0;
        }
        if (chordal_cmd->parsed()) {
            const auto g = smallarr::load_graph_file(input_path);
            const auto report = smallarr::is_chordal(g);
            emit(smallarr::chordality_report_to_json(report), "");
            return report.chordal ? 0 : 2;
        }
        if (froberg_cmd->parsed()) {
            const auto g = smallarr::load_graph_file(input_path);
            const auto report = smallarr::froberg_check(g);
            emit(smallarr::froberg_report_to_json(report), "");
            return report.consistent ? 0 : 2;
        }
        if (random_cmd->parsed()) {
            const auto arr = smallarr::random_small_arrangement(components, ambient, seed);
            emit(smallarr::arrangement_to_json(arr), "");
            return 0;
        }
        if (selfcheck_cmd->parsed()) {
            const auto report = smallarr::selfcheck(filter);
            for (const auto& item : report.items)
                std::cout << (item.pass ? "PASS " : "FAIL ") << item.name
                          << (item.detail.empty() ? "" : "  [" + item.detail + "]") << "\n";
            return report.all_pass() ? 0 : 2;
        }
    } catch (const smallarr::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
