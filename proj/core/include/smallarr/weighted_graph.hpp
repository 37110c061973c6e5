#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace smallarr {

/// Undirected edge with u < v.
struct WeightedEdge {
    int u = 0;
    int v = 0;
    long long weight = 0;

    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Intersection graph of an arrangement: vertex weight is the rank of the
/// subspace, edge weight the rank of the pairwise intersection (edges exist
/// exactly for nonzero intersections, so weights are >= 1 and strictly below
/// both endpoint weights).
struct WeightedGraph {
    std::vector<long long> vertex_weights;
    std::vector<WeightedEdge> edges;  // sorted by (u, v), unique

    int vertex_count() const { return static_cast<int>(vertex_weights.size()); }

    const WeightedEdge* find_edge(int u, int v) const;
    bool has_edge(int u, int v) const { return find_edge(u, v) != nullptr; }

    std::vector<std::vector<int>> adjacency() const;

    /// Connected-component id per vertex, ids numbered by smallest member.
    std::vector<int> component_ids() const;
};

/// Subset of a graph's edges forming a disjoint union of trees.
struct Forest {
    std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted

    bool contains(int u, int v) const;
    std::vector<std::vector<int>> adjacency(int n) const;
    int degree(int v) const;

    friend bool operator==(const Forest&, const Forest&) = default;
};

/// Permutation of the vertices, optionally tied to the spanning forest it is
/// compatible with (see is_compatible in forest.hpp).
struct Ordering {
    std::vector<int> sequence;
    std::optional<Forest> forest;
};

}  // namespace smallarr
