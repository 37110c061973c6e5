#pragma once

#include <cstddef>
#include <vector>

#include "smallarr/weighted_graph.hpp"

namespace smallarr {

class Arrangement;

/// Sum of vertex weights minus sum of the forest's edge weights. Every edge
/// of f must be an edge of g. Spanning forests of maximal weight are exactly
/// those of minimal weighted Euler characteristic.
long long weighted_euler_char(const WeightedGraph& g, const Forest& f);

/// Maximum-weight spanning forest via Prim, run per connected component from
/// its smallest vertex; frontier ties broken by the lexicographically
/// smallest (u, v). Fully deterministic.
Forest max_weight_spanning_forest(const WeightedGraph& g);

/// True when the reversed ordering removes one leaf of the forest at a time:
/// every vertex has at most one forest neighbor among its predecessors.
/// Demanding instead that the first vertex of a tree be a leaf of the whole
/// tree would wrongly reject orders that start at the center of a star, and
/// those can be linearly joined (see the ordering-completeness tests).
bool is_compatible(const Forest& f, int n, const std::vector<int>& order);

/// One compatible ordering: each tree rooted at its lowest-index leaf and
/// traversed breadth first with neighbors in index order; trees emitted in
/// root order.
Ordering compatible_ordering(const WeightedGraph& g, const Forest& f);

/// All orderings compatible with f (up to `limit`), including interleavings
/// across trees, in lexicographic order.
std::vector<Ordering> enumerate_compatible_orderings(const WeightedGraph& g, const Forest& f,
                                                     std::size_t limit);

/// Maximum cardinality search: repeatedly select the unselected vertex with
/// the most already-selected neighbors, ties by smallest index. Adjacency
/// counts ignore weights.
Ordering mcs_ordering(const WeightedGraph& g);

struct CliqueIntersectionReport {
    bool ok = true;
    std::vector<int> witness_path;  // nonempty on failure
};

/// Checks, for every path v1..vk in the forest, that L_{v1} ∩ L_{vk} equals
/// the intersection of all subspaces along the path.
CliqueIntersectionReport clique_intersection_holds(const Arrangement& arr, const Forest& f);

/// Edges lying in at least one maximum-weight spanning forest: (u,v,w)
/// qualifies iff u and v are disconnected in the subgraph of edges with
/// weight strictly greater than w.
std::vector<WeightedEdge> essential_edges(const WeightedGraph& g);

}  // namespace smallarr
