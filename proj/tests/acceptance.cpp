// Acceptance suite: the project-level checks, one printed pass/fail line
// each. Exits nonzero if any check fails. Brute-force enumeration oracles
// live in support.hpp and are independent of the library's algorithms.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "smallarr/chordal.hpp"
#include "smallarr/fixtures.hpp"
#include "smallarr/forest.hpp"
#include "smallarr/generate.hpp"
#include "smallarr/ideals.hpp"
#include "smallarr/io.hpp"
#include "support.hpp"

using namespace smallarr;
using test_support::all_permutations;
using test_support::all_spanning_forests;
using test_support::minimal_forests;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Arrangement> seeded_small_instances(int count, int max_components, int max_ambient,
                                                std::uint64_t seed_base) {
    std::vector<Arrangement> out;
    for (int i = 0; i < count; ++i) {
        Rng rng(seed_base + static_cast<std::uint64_t>(i));
        const int comps = static_cast<int>(rng.int_in(1, max_components));
        const int ambient = static_cast<int>(rng.int_in(std::max(comps, 2), max_ambient));
        out.push_back(random_small_arrangement(comps, ambient, rng.next()));
    }
    return out;
}

bool criterion_example05(std::ostream& log) {
    const auto start = Clock::now();
    const auto arr = load_arrangement(fixtures::text("example05"));

    const auto report = is_small(arr);
    bool ok = report.small && report.chi_w_min == 5 && report.span_rank == 5;
    ok = ok && verify_linearly_joined(arr, {0, 1, 2, 3}).ok;
    ok = ok && !verify_linearly_joined(arr, {3, 2, 1, 0}).ok;

    const auto sub = is_small(arr.restricted_to({1, 2, 3}));
    ok = ok && !sub.small;

    const auto sampling = small_char_sample(arr, 2, 100, 11);
    ok = ok && sampling.builtin_findings.size() == 1 &&
         sampling.builtin_findings[0].component == 0 &&
         sampling.builtin_findings[0].points.size() == 3 &&
         sampling.builtin_findings[0].plane.rows() == 2;

    const double elapsed = seconds_since(start);
    log << "elapsed " << elapsed << "s";
    return ok && elapsed < 1.0;
}

bool criterion_froberg_sweep(std::ostream& log) {
    const auto start = Clock::now();
    const auto five = froberg_sweep(5, false);
    const auto six = froberg_sweep(6, true);
    const double elapsed = seconds_since(start);
    log << "n=5: " << five.checked << " graphs, " << five.failures.size() << " failures; "
        << "n=6 connected: " << six.checked << " graphs, " << six.failures.size()
        << " failures; elapsed " << elapsed << "s";
    return five.checked == 1024 && five.failures.empty() && six.failures.empty() &&
           elapsed < 60.0;
}

bool criterion_chi_lower_bound(std::ostream& log) {
    int violations = 0, small_count = 0;
    for (int i = 0; i < 500; ++i) {
        const auto arr = test_support::random_arrangement(9000 + i);
        const auto g = intersection_graph(arr);
        const long long span_rank = static_cast<long long>(arr.span().rows());
        const bool small = is_small(arr).small;
        small_count += small ? 1 : 0;

        bool attained = false;
        for (const auto& f : all_spanning_forests(g)) {
            const long long chi = weighted_euler_char(g, f);
            if (chi < span_rank) ++violations;
            attained = attained || chi == span_rank;
        }
        if (attained != small) ++violations;
    }
    log << "500 instances (" << small_count << " small), " << violations << " violations";
    return violations == 0;
}

bool criterion_ordering_completeness(std::ostream& log) {
    const auto instances = seeded_small_instances(100, 5, 8, 4000);
    int mismatches = 0;
    for (const auto& arr : instances) {
        const auto g = intersection_graph(arr);
        const auto minimal = minimal_forests(g);
        const int n = static_cast<int>(arr.size());
        for (const auto& perm : all_permutations(n)) {
            const bool joined = verify_linearly_joined(arr, perm).ok;
            bool compatible = false;
            for (const auto& f : minimal)
                compatible = compatible || is_compatible(f, n, perm);
            if (joined != compatible) ++mismatches;
        }
    }
    log << "100 instances, " << mismatches << " permutation mismatches";
    return mismatches == 0;
}

bool criterion_clique_intersection(std::ostream& log) {
    const auto instances = seeded_small_instances(100, 5, 8, 4000);
    int mismatches = 0, edge_mismatches = 0;
    for (const auto& arr : instances) {
        const auto g = intersection_graph(arr);
        const auto forests = all_spanning_forests(g);
        long long best = 0;
        bool first = true;
        for (const auto& f : forests) {
            const long long chi = weighted_euler_char(g, f);
            if (first || chi < best) best = chi, first = false;
        }
        for (const auto& f : forests) {
            const bool minimal = weighted_euler_char(g, f) == best;
            const bool clique = clique_intersection_holds(arr, f).ok;
            if (minimal != clique) ++mismatches;
        }
        std::set<std::pair<int, int>> expected;
        for (const auto& f : minimal_forests(g))
            expected.insert(f.edges.begin(), f.edges.end());
        std::set<std::pair<int, int>> actual;
        for (const auto& e : essential_edges(g)) actual.insert({e.u, e.v});
        if (expected != actual) ++edge_mismatches;
    }
    log << "100 instances, " << mismatches << " forest mismatches, " << edge_mismatches
        << " essential-edge mismatches";
    return mismatches == 0 && edge_mismatches == 0;
}

bool criterion_ideal_generation(std::ostream& log) {
    // concrete chain-of-lines values first, with an independent monomial count
    const auto path3 = load_arrangement(fixtures::text("path_of_3_lines"));
    const auto path_gens = equations_for_ordered_arrangement(path3, {0, 1, 2});
    std::size_t monomial_degree3 = 0;
    for (const auto& expo : monomial_exponents(4, 3)) {
        const bool in_first = expo[2] > 0 || expo[3] > 0;   // vanishes on span(e1,e2)
        const bool in_second = expo[0] > 0 || expo[3] > 0;  // vanishes on span(e2,e3)
        const bool in_third = expo[0] > 0 || expo[1] > 0;   // vanishes on span(e3,e4)
        if (in_first && in_second && in_third) ++monomial_degree3;
    }
    bool ok = path_gens.mu_predicted == 3 && path_gens.degree2_rank == 3 &&
              degree_piece(path3, 3).rank == monomial_degree3;

    int failures = 0;
    const auto instances = seeded_small_instances(100, 5, 6, 12000);
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& arr = instances[i];
        if (arr.size() < 2) continue;
        const auto report = is_small(arr);
        const auto gens = equations_for_ordered_arrangement(arr, report.ordering->sequence);
        const auto check = verify_generation(arr, gens);
        if (!check.all_ok()) {
            ++failures;
            log << "\n  instance " << i << ": " << check.detail;
        }
    }
    log << "degree-3 oracle count " << monomial_degree3 << ", " << failures
        << " verification failures";
    return ok && failures == 0;
}

bool criterion_projection(std::ostream& log) {
    int projected = 0, failures = 0;
    for (int i = 0; i < 100; ++i) {
        Rng rng(21000 + i);
        const int comps = static_cast<int>(rng.int_in(1, 5));
        const int ambient = static_cast<int>(rng.int_in(std::max(comps, 3), 8));
        const auto arr = random_small_arrangement(comps, ambient, rng.next());

        // a valid projection point exists on any component not inside the
        // span of the others
        for (std::size_t c = 0; c < arr.size(); ++c) {
            Matrix others(0, arr.ambient_rank());
            for (std::size_t j = 0; j < arr.size(); ++j)
                if (j != c) others = vstack(others, arr.component(j).basis);
            others = rref(others);
            const Matrix meet = row_space_intersect(arr.component(c).basis, others);
            if (meet.rows() == arr.component(c).rank()) continue;
            const Matrix fresh = complement_within(arr.component(c).basis, meet);
            const auto result =
                project_from_point(arr, static_cast<int>(c), fresh.row(0));
            ++projected;
            if (!is_small(result.image).small) ++failures;
            break;
        }
    }
    log << projected << " projections, " << failures << " non-small images";
    return projected == 100 && failures == 0;
}

bool criterion_mcs_ordering(std::ostream& log) {
    const auto instances = seeded_small_instances(100, 5, 8, 21000);
    int coordinate_failures = 0, logged_findings = 0;
    for (const auto& arr : instances) {
        const auto order = mcs_ordering(intersection_graph(arr));
        if (verify_linearly_joined(arr, order.sequence).ok) continue;
        if (test_support::is_coordinate_arrangement(arr)) {
            ++coordinate_failures;
            log << "\n  coordinate failure: " << arrangement_to_json(arr).dump();
        } else {
            ++logged_findings;
            log << "\n  finding (non-coordinate, logged): "
                << arrangement_to_json(arr).dump();
        }
    }
    log << "\n  " << logged_findings << " non-coordinate findings logged, "
        << coordinate_failures << " coordinate failures";
    return coordinate_failures == 0;
}

bool criterion_sampling(std::ostream& log) {
    const auto start = Clock::now();
    int violations = 0, abandoned = 0;
    for (int i = 0; i < 20; ++i) {
        Rng rng(31000 + i);
        const int comps = static_cast<int>(rng.int_in(1, 5));
        const int ambient = static_cast<int>(rng.int_in(std::max(comps, 4), 8));
        const auto arr = random_small_arrangement(comps, ambient, rng.next());
        for (int plane_rank : {2, 3}) {
            const auto report = small_char_sample(arr, plane_rank, 200, rng.next());
            violations += static_cast<int>(report.trial_violations.size());
            abandoned += report.abandoned_trials;
        }
    }

    // the bundled non-small fixtures certify their failure deterministically
    bool fixtures_certified = true;
    for (const auto* name : {"cycle4_lines", "triangle_of_lines"}) {
        const auto arr = load_arrangement(fixtures::text(name));
        const auto report = is_small(arr);
        const auto sampling = small_char_sample(arr, 2, 50, 5);
        const bool certified =
            !sampling.builtin_findings.empty() || report.chi_w_min > report.span_rank;
        fixtures_certified = fixtures_certified && certified && !report.small;
    }

    const double elapsed = seconds_since(start);
    log << "8000 draws, " << violations << " violations, " << abandoned
        << " abandoned; fixtures certified: " << (fixtures_certified ? "yes" : "no")
        << "; elapsed " << elapsed << "s";
    return violations == 0 && fixtures_certified && elapsed < 30.0;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* title;
        std::function<bool(std::ostream&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "model replication (four lines through a common line)", criterion_example05},
        {2, "exhaustive chordality/smallness sweep (n <= 5 all, n = 6 connected)",
         criterion_froberg_sweep},
        {3, "weighted Euler characteristic lower bound over all spanning forests",
         criterion_chi_lower_bound},
        {4, "linearly joined orders = orders compatible with a minimal forest",
         criterion_ordering_completeness},
        {5, "minimal forests = clique-intersection forests; essential edges",
         criterion_clique_intersection},
        {6, "quadratic generators match the exact degree-2/3 oracles",
         criterion_ideal_generation},
        {7, "projection from a point preserves smallness", criterion_projection},
        {8, "MCS orderings verify (failures logged as findings)", criterion_mcs_ordering},
        {9, "random-section sampling finds no violations on small instances",
         criterion_sampling},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        std::ostringstream log;
        bool ok = false;
        try {
            ok = criterion.run(log);
        } catch (const std::exception& e) {
            log << "exception: " << e.what();
        }
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion.number << ": "
                  << criterion.title << "  [" << log.str() << "]" << std::endl;
    }
    if (failed != 0) std::cout << failed << " criteria failed" << std::endl;
    return failed == 0 ? 0 : 1;
}
