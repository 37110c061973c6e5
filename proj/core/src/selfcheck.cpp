#include "smallarr/selfcheck.hpp"

#include <functional>

#include "smallarr/fixtures.hpp"
#include "smallarr/forest.hpp"
#include "smallarr/ideals.hpp"
#include "smallarr/io.hpp"

namespace smallarr {

bool SelfcheckReport::all_pass() const {
    for (const auto& item : items)
        if (!item.pass) return false;
    return true;
}

namespace {

using Check = std::function<bool(std::string&)>;

}  // namespace

SelfcheckReport selfcheck(const std::string& filter) {
    std::vector<std::pair<std::string, Check>> checks;

    checks.emplace_back("example05.small", [](std::string& detail) {
        const auto report = is_small(load_arrangement(fixtures::text("example05")));
        detail = "chi_w_min=" + std::to_string(report.chi_w_min) +
                 " span_rank=" + std::to_string(report.span_rank);
        return report.small && report.chi_w_min == 5 && report.span_rank == 5;
    });
    checks.emplace_back("example05.order-forward", [](std::string&) {
        const auto arr = load_arrangement(fixtures::text("example05"));
        return verify_linearly_joined(arr, {0, 1, 2, 3}).ok;
    });
    checks.emplace_back("example05.order-reverse-fails", [](std::string&) {
        const auto arr = load_arrangement(fixtures::text("example05"));
        return !verify_linearly_joined(arr, {3, 2, 1, 0}).ok;
    });
    checks.emplace_back("example05.sub-arrangement-not-small", [](std::string& detail) {
        const auto arr = load_arrangement(fixtures::text("example05"));
        const auto report = is_small(arr.restricted_to({1, 2, 3}));
        detail = "chi_w_min=" + std::to_string(report.chi_w_min) +
                 " span_rank=" + std::to_string(report.span_rank);
        return !report.small && report.chi_w_min == 6 && report.span_rank == 5;
    });
    checks.emplace_back("example05.builtin-secant", [](std::string& detail) {
        const auto arr = load_arrangement(fixtures::text("example05"));
        const auto report = small_char_sample(arr, 2, 50, 7);
        detail = "trial_violations=" + std::to_string(report.trial_violations.size()) +
                 " builtin_findings=" + std::to_string(report.builtin_findings.size());
        return report.trial_violations.empty() && report.builtin_findings.size() == 1 &&
               report.builtin_findings[0].component == 0 &&
               report.builtin_findings[0].points.size() == 3;
    });
    checks.emplace_back("path3.small-and-equations", [](std::string& detail) {
        const auto arr = load_arrangement(fixtures::text("path_of_3_lines"));
        const auto report = is_small(arr);
        if (!report.small || report.chi_w_min != 4) return false;
        const auto gens = equations_for_ordered_arrangement(arr, {0, 1, 2});
        detail = "mu=" + std::to_string(gens.mu_predicted) +
                 " degree2_rank=" + std::to_string(gens.degree2_rank);
        return gens.mu_predicted == 3 && gens.degree2_rank == 3 &&
               verify_generation(arr, gens).all_ok();
    });
    checks.emplace_back("triangle.not-small", [](std::string& detail) {
        const auto report = is_small(load_arrangement(fixtures::text("triangle_of_lines")));
        detail = "chi_w_min=" + std::to_string(report.chi_w_min) +
                 " span_rank=" + std::to_string(report.span_rank);
        return !report.small && report.chi_w_min == 4 && report.span_rank == 3;
    });
    checks.emplace_back("cycle4.not-small", [](std::string& detail) {
        const auto report = is_small(load_arrangement(fixtures::text("cycle4_lines")));
        detail = "chi_w_min=" + std::to_string(report.chi_w_min) +
                 " span_rank=" + std::to_string(report.span_rank);
        return !report.small && report.chi_w_min == 5 && report.span_rank == 4;
    });
    checks.emplace_back("c4-graph.froberg", [](std::string&) {
        const auto report = froberg_check(load_graph(fixtures::text("c4")));
        return report.consistent && !report.chordal && !report.small;
    });
    checks.emplace_back("skew-lines.direct-sum", [](std::string&) {
        const auto arr = load_arrangement(fixtures::text("skew_lines"));
        const auto sum = direct_sum_components(arr);
        return sum.parts.size() == 2 && sum.is_direct_sum && is_small(arr).small;
    });
    checks.emplace_back("froberg.sweep-5-vertices", [](std::string& detail) {
        const auto result = froberg_sweep(5, false);
        detail = "checked=" + std::to_string(result.checked) +
                 " failures=" + std::to_string(result.failures.size()) +
                 " facet-mcs-findings=" + std::to_string(result.mcs_findings.size());
        return result.checked == 1024 && result.failures.empty();
    });

    SelfcheckReport report;
    for (auto& [name, run] : checks) {
        if (name.find(filter) == std::string::npos) continue;
        SelfcheckItem item;
        item.name = name;
        try {
            item.pass = run(item.detail);
        } catch (const std::exception& e) {
            item.pass = false;
            item.detail = std::string("exception: ") + e.what();
        }
        report.items.push_back(std::move(item));
    }
    return report;
}

}  // namespace smallarr
