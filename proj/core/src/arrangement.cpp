#include "smallarr/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "smallarr/errors.hpp"
#include "smallarr/forest.hpp"
#include "smallarr/rng.hpp"

namespace smallarr {

namespace {

/// Canonical label of a projective point given any nonzero vector on its
/// cone: the rref of the one-row matrix, i.e. scaled so the first nonzero
/// coordinate is 1.
std::vector<Rational> canonical_point(const Matrix& rank_one_space) {
    return rank_one_space.row(0);
}

}  // namespace

Arrangement Arrangement::create(std::size_t ambient_rank, std::vector<Subspace> components) {
    if (ambient_rank == 0) throw input_error("ambient_rank must be at least 1");
    for (auto& sub : components) {
        if (sub.basis.cols() != ambient_rank)
            throw input_error("component \"" + sub.name + "\" has " +
                              std::to_string(sub.basis.cols()) + " columns, expected " +
                              std::to_string(ambient_rank));
        sub.basis = rref(sub.basis);
        if (sub.basis.rows() == 0)
            throw input_error("component \"" + sub.name + "\" has rank 0");
    }
    std::set<std::string> names;
    for (const auto& sub : components)
        if (!names.insert(sub.name).second)
            throw input_error("duplicate component name \"" + sub.name + "\"");
    // Bases are canonical here, so rank(span(B_i) + span(B_j)) dropping to
    // either row count detects containment in one elimination per pair.
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = i + 1; j < components.size(); ++j) {
            const std::size_t joint = rank(vstack(components[i].basis, components[j].basis));
            if (joint == components[i].basis.rows())
                throw input_error("containment: component \"" + components[j].name +
                                  "\" lies inside component \"" + components[i].name + "\"");
            if (joint == components[j].basis.rows())
                throw input_error("containment: component \"" + components[i].name +
                                  "\" lies inside component \"" + components[j].name + "\"");
        }
    Arrangement arr;
    arr.ambient_rank_ = ambient_rank;
    arr.components_ = std::move(components);
    return arr;
}

Matrix Arrangement::span() const {
    Matrix all(0, ambient_rank_);
    for (const auto& sub : components_) all = vstack(all, sub.basis);
    return rref(all);
}

Arrangement Arrangement::restricted_to(const std::vector<int>& indices) const {
    std::vector<Subspace> subs;
    for (int i : indices) subs.push_back(components_.at(static_cast<std::size_t>(i)));
    return create(ambient_rank_, std::move(subs));
}

WeightedGraph intersection_graph(const Arrangement& arr) {
    WeightedGraph g;
    const int n = static_cast<int>(arr.size());
    for (int i = 0; i < n; ++i)
        g.vertex_weights.push_back(static_cast<long long>(arr.component(i).rank()));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // modular law: rank of the intersection without computing it
            const long long joint = static_cast<long long>(
                rank(vstack(arr.component(i).basis, arr.component(j).basis)));
            const long long w = static_cast<long long>(arr.component(i).rank()) +
                                static_cast<long long>(arr.component(j).rank()) - joint;
            if (w >= 1) g.edges.push_back({i, j, w});
        }
    return g;
}

VerifyResult verify_linearly_joined(const Arrangement& arr, const std::vector<int>& order) {
    const int n = static_cast<int>(arr.size());
    {
        std::vector<bool> seen(arr.size(), false);
        if (static_cast<int>(order.size()) != n)
            throw input_error("order has wrong length");
        for (int v : order) {
            if (v < 0 || v >= n || seen[v]) throw input_error("order is not a permutation");
            seen[v] = true;
        }
    }

    VerifyResult result;
    if (n == 0) return result;
    Matrix prefix_span = arr.component(order[0]).basis;
    for (int i = 1; i < n; ++i) {
        const Matrix& next = arr.component(order[i]).basis;
        const Matrix joint = rref(vstack(prefix_span, next));
        const std::size_t meet_rank = prefix_span.rows() + next.rows() - joint.rows();
        result.step_ranks.push_back(static_cast<int>(meet_rank));
        bool ok = meet_rank == 0;
        if (!ok) {
            const Matrix meet = row_space_intersect(prefix_span, next);
            for (int j = 0; !ok && j < i; ++j) {
                const Matrix& earlier = arr.component(order[j]).basis;
                ok = rank(vstack(earlier, meet)) == earlier.rows();
            }
        }
        if (!ok) {
            result.ok = false;
            result.first_failure = i;
            return result;
        }
        prefix_span = joint;
    }
    return result;
}

SmallnessReport is_small(const Arrangement& arr) {
    SmallnessReport report;
    const WeightedGraph g = intersection_graph(arr);
    report.span_rank = static_cast<long long>(arr.span().rows());
    report.witness_forest = max_weight_spanning_forest(g);
    report.chi_w_min = weighted_euler_char(g, report.witness_forest);
    report.small = report.chi_w_min == report.span_rank;
    if (report.small && arr.size() > 0) {
        Ordering order = compatible_ordering(g, report.witness_forest);
        const VerifyResult check = verify_linearly_joined(arr, order.sequence);
        if (!check.ok)
            throw std::logic_error(
                "compatible ordering of a minimal forest failed verification; "
                "this contradicts the spanning-forest criterion");
        report.ordering = std::move(order);
        report.certificate = check.step_ranks;
    }
    return report;
}

DirectSumReport direct_sum_components(const Arrangement& arr) {
    const WeightedGraph g = intersection_graph(arr);
    const std::vector<int> ids = g.component_ids();
    std::map<int, std::vector<int>> by_id;
    for (int v = 0; v < g.vertex_count(); ++v) by_id[ids[v]].push_back(v);

    DirectSumReport report;
    std::size_t rank_sum = 0;
    for (const auto& [id, members] : by_id) {
        Matrix part_span(0, arr.ambient_rank());
        for (int v : members) part_span = vstack(part_span, arr.component(v).basis);
        rank_sum += rank(part_span);
        report.parts.push_back(members);
    }
    report.is_direct_sum = rank_sum == arr.span().rows();
    return report;
}

ProjectionResult project_from_point(const Arrangement& arr, int component,
                                    const std::vector<Rational>& point) {
    if (component < 0 || component >= static_cast<int>(arr.size()))
        throw input_error("no component with index " + std::to_string(component));
    if (point.size() != arr.ambient_rank())
        throw input_error("projection point has wrong length");
    Matrix p(0, arr.ambient_rank());
    p.append_row(point);
    p = rref(p);
    if (p.rows() == 0) throw input_error("projection point is zero");
    if (!row_space_contains(arr.component(component).basis, p))
        throw input_error("point is not on component \"" + arr.component(component).name + "\"");
    Matrix others(0, arr.ambient_rank());
    for (std::size_t i = 0; i < arr.size(); ++i)
        if (static_cast<int>(i) != component) others = vstack(others, arr.component(i).basis);
    if (row_space_contains(rref(others), p))
        throw input_error("point lies in the span of the other components");

    // Completing p to a basis and dropping the p-coordinate amounts to
    // clearing the pivot coordinate of p from every vector, then deleting it.
    const std::vector<Rational> pv = p.row(0);
    std::size_t pivot = 0;
    while (pv[pivot] == 0) ++pivot;

    auto project_vector = [&](const std::vector<Rational>& v) {
        std::vector<Rational> out;
        out.reserve(arr.ambient_rank() - 1);
        const Rational factor = v[pivot] / pv[pivot];
        for (std::size_t c = 0; c < arr.ambient_rank(); ++c) {
            if (c == pivot) continue;
            out.push_back(v[c] - factor * pv[c]);
        }
        return out;
    };

    ProjectionResult result{Arrangement::create(1, {}), {}, {}};
    std::vector<Subspace> images;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        Matrix image(0, arr.ambient_rank() - 1);
        for (std::size_t r = 0; r < arr.component(i).basis.rows(); ++r)
            image.append_row(project_vector(arr.component(i).basis.row(r)));
        image = rref(image);
        if (image.rows() == 0) {
            result.dropped.push_back(arr.component(i).name);
            continue;
        }
        images.push_back(Subspace{arr.component(i).name, image});
    }

    // Only the projected component's image can have become comparable; drop
    // any image that lies inside another one.
    std::vector<Subspace> kept;
    for (const auto& candidate : images) {
        bool contained = false;
        for (const auto& other : images) {
            if (&other == &candidate) continue;
            if (row_space_contains(other.basis, candidate.basis) &&
                !(same_row_space(other.basis, candidate.basis) &&
                  other.name > candidate.name)) {
                result.merged.emplace_back(candidate.name, other.name);
                contained = true;
                break;
            }
        }
        if (!contained) kept.push_back(candidate);
    }
    result.image = Arrangement::create(arr.ambient_rank() - 1, std::move(kept));
    return result;
}

SmallCharReport small_char_sample(const Arrangement& arr, int plane_rank, int trials,
                                  std::uint64_t seed) {
    if (trials < 1) throw input_error("trials must be at least 1");
    if (plane_rank < 1 || plane_rank > static_cast<int>(arr.ambient_rank()))
        throw input_error("plane rank out of range");
    SmallCharReport report;
    const std::size_t ambient = arr.ambient_rank();
    Rng rng(seed);

    auto collect_points = [&](const Matrix& plane, std::size_t skip_component,
                              bool& finite) -> std::vector<std::vector<Rational>> {
        std::set<std::vector<Rational>> points;
        finite = true;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (i == skip_component) continue;
            const Matrix meet = row_space_intersect(plane, arr.component(i).basis);
            if (meet.rows() >= 2) {
                finite = false;
                return {};
            }
            if (meet.rows() == 1) points.insert(canonical_point(meet));
        }
        return {points.begin(), points.end()};
    };

    constexpr int kRetryBudget = 20;
    for (int trial = 0; trial < trials; ++trial) {
        bool drawn = false;
        for (int attempt = 0; attempt < kRetryBudget && !drawn; ++attempt) {
            Matrix plane(static_cast<std::size_t>(plane_rank), ambient);
            for (std::size_t r = 0; r < plane.rows(); ++r)
                for (std::size_t c = 0; c < ambient; ++c)
                    plane.at(r, c) = Rational(rng.int_in(-50, 50));
            plane = rref(plane);
            if (plane.rows() != static_cast<std::size_t>(plane_rank)) continue;
            bool finite = true;
            const auto points = collect_points(plane, arr.size(), finite);
            if (!finite) continue;
            drawn = true;
            if (points.size() > static_cast<std::size_t>(plane_rank))
                report.trial_violations.push_back(PlaneWitness{plane, points, std::nullopt});
        }
        if (!drawn) ++report.abandoned_trials;
    }

    // Built-in candidates: each component, measured against all the others.
    for (std::size_t i = 0; i < arr.size(); ++i) {
        bool finite = true;
        const auto points = collect_points(arr.component(i).basis, i, finite);
        if (!finite) continue;
        if (points.size() > arr.component(i).rank())
            report.builtin_findings.push_back(
                PlaneWitness{arr.component(i).basis, points, static_cast<int>(i)});
    }
    return report;
}

}  // namespace smallarr
