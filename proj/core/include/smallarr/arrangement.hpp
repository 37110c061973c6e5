#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smallarr/matrix.hpp"
#include "smallarr/weighted_graph.hpp"

namespace smallarr {

/// A linear subspace of projective space, stored as the canonical basis of
/// its affine cone. rank >= 1; projective dimension is rank - 1.
struct Subspace {
    std::string name;
    Matrix basis;  // canonical rref, rows = rank, cols = ambient rank

    std::size_t rank() const { return basis.rows(); }
};

/// Finite set of pairwise incomparable subspaces of a common projective
/// space. Construction canonicalizes every basis and validates the
/// incomparability and naming invariants.
class Arrangement {
public:
    static Arrangement create(std::size_t ambient_rank, std::vector<Subspace> components);

    std::size_t ambient_rank() const { return ambient_rank_; }
    std::size_t size() const { return components_.size(); }
    const std::vector<Subspace>& components() const { return components_; }
    const Subspace& component(std::size_t i) const { return components_[i]; }

    /// Canonical basis of the span of all components.
    Matrix span() const;

    /// Sub-arrangement on the given component indices (order preserved).
    Arrangement restricted_to(const std::vector<int>& indices) const;

private:
    Arrangement() = default;
    std::size_t ambient_rank_ = 0;
    std::vector<Subspace> components_;
};

/// Vertex i carries weight rank(L_i); edge (i,j) exists iff the intersection
/// is nonzero, weighted by its rank.
WeightedGraph intersection_graph(const Arrangement& arr);

struct SmallnessReport {
    bool small = false;
    long long chi_w_min = 0;
    long long span_rank = 0;
    Forest witness_forest;
    std::optional<Ordering> ordering;   // present (and verified) iff small
    std::vector<int> certificate;       // per-step intersection ranks of that ordering
};

/// Decides smallness: the arrangement is small iff some spanning forest of
/// the intersection graph has weighted Euler characteristic equal to the
/// rank of the span. The forest of minimal characteristic is returned as a
/// witness; when equality holds, a compatible (verified) ordering comes along.
SmallnessReport is_small(const Arrangement& arr);

struct VerifyResult {
    bool ok = true;
    std::optional<int> first_failure;  // position in the order whose step failed
    std::vector<int> step_ranks;       // rank of span(prefix) ∩ next, per step taken
};

/// Checks the linearly joined condition step by step: at each step the
/// intersection of the span of the prefix with the next component must be
/// zero or contained in a single earlier component.
VerifyResult verify_linearly_joined(const Arrangement& arr, const std::vector<int>& order);

struct DirectSumReport {
    std::vector<std::vector<int>> parts;  // connected components of the graph
    bool is_direct_sum = false;           // ranks of part spans add up to the total
};

DirectSumReport direct_sum_components(const Arrangement& arr);

struct ProjectionResult {
    Arrangement image;
    /// Components whose projection became contained in another image and was
    /// dropped to restore incomparability: (dropped name, containing name).
    std::vector<std::pair<std::string, std::string>> merged;
    /// Components whose projection collapsed to rank zero.
    std::vector<std::string> dropped;
};

/// Linear projection from a point p on the named component, realized by
/// completing p to a basis and deleting the p-coordinate. Requires p on the
/// component and outside the span of all other components.
ProjectionResult project_from_point(const Arrangement& arr, int component,
                                    const std::vector<Rational>& point);

struct PlaneWitness {
    Matrix plane;
    std::vector<std::vector<Rational>> points;  // distinct intersection points
    std::optional<int> component;  // set when the plane is a component (built-in candidate)
};

struct SmallCharReport {
    /// Random sections violating the Bezout-type bound for this arrangement.
    std::vector<PlaneWitness> trial_violations;
    /// Component planes L_i met by more than rank(L_i) points of the other
    /// components; each certifies that the arrangement minus L_i is not small.
    std::vector<PlaneWitness> builtin_findings;
    int abandoned_trials = 0;  // draws that exhausted the retry budget
};

/// Randomized sampling check: draws `trials` random subspaces of the given
/// rank with finite intersection against every component and counts the
/// distinct intersection points; more than rank(plane) many is a violation.
/// Also scans the built-in candidates described above.
SmallCharReport small_char_sample(const Arrangement& arr, int plane_rank, int trials,
                                  std::uint64_t seed);

}  // namespace smallarr
