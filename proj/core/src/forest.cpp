#include "smallarr/forest.hpp"

#include <algorithm>
#include <numeric>

#include "smallarr/arrangement.hpp"
#include "smallarr/errors.hpp"

namespace smallarr {

namespace {

// Union-find over vertex indices.
class Dsu {
public:
    explicit Dsu(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int v) {
        while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[b] = a;  // smaller root wins, keeps component ids canonical
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

const WeightedEdge* WeightedGraph::find_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const auto& e : edges)
        if (e.u == u && e.v == v) return &e;
    return nullptr;
}

std::vector<std::vector<int>> WeightedGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_weights.size());
    for (const auto& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

std::vector<int> WeightedGraph::component_ids() const {
    Dsu dsu(vertex_count());
    for (const auto& e : edges) dsu.unite(e.u, e.v);
    std::vector<int> ids(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) ids[v] = dsu.find(v);
    return ids;
}

bool Forest::contains(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
}

std::vector<std::vector<int>> Forest::adjacency(int n) const {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

int Forest::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

long long weighted_euler_char(const WeightedGraph& g, const Forest& f) {
    long long chi = 0;
    for (long long w : g.vertex_weights) chi += w;
    for (const auto& [u, v] : f.edges) {
        const WeightedEdge* e = g.find_edge(u, v);
        if (e == nullptr)
            throw input_error("forest edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") is not an edge of the graph");
        chi -= e->weight;
    }
    return chi;
}

Forest max_weight_spanning_forest(const WeightedGraph& g) {
    const int n = g.vertex_count();
    Forest forest;
    std::vector<bool> in_tree(n, false);

    for (int start = 0; start < n; ++start) {
        if (in_tree[start]) continue;
        in_tree[start] = true;
        for (;;) {
            const WeightedEdge* best = nullptr;
            for (const auto& e : g.edges) {
                if (in_tree[e.u] == in_tree[e.v]) continue;  // not a frontier edge
                if (best == nullptr || e.weight > best->weight ||
                    (e.weight == best->weight &&
                     std::make_pair(e.u, e.v) < std::make_pair(best->u, best->v)))
                    best = &e;
            }
            if (best == nullptr) break;
            forest.edges.emplace_back(best->u, best->v);
            in_tree[best->u] = in_tree[best->v] = true;
        }
    }
    std::sort(forest.edges.begin(), forest.edges.end());
    return forest;
}

bool is_compatible(const Forest& f, int n, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != n) return false;
    const auto adj = f.adjacency(n);

    // Reverse leaf removal: read backwards, each vertex must be a leaf of
    // the forest restricted to the vertices still present. Equivalently,
    // every vertex has at most one forest neighbor among its predecessors.
    std::vector<bool> seen(n, false);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) return false;
        int chosen_neighbors = 0;
        for (int w : adj[v]) chosen_neighbors += seen[w] ? 1 : 0;
        if (chosen_neighbors > 1) return false;
        seen[v] = true;
    }
    return true;
}

Ordering compatible_ordering(const WeightedGraph& g, const Forest& f) {
    const int n = g.vertex_count();
    const auto adj = f.adjacency(n);

    Dsu dsu(n);
    for (const auto& [u, v] : f.edges) dsu.unite(u, v);
    std::vector<std::vector<int>> trees(n);
    for (int v = 0; v < n; ++v) trees[dsu.find(v)].push_back(v);

    Ordering out;
    out.forest = f;
    for (int root_id = 0; root_id < n; ++root_id) {
        const auto& members = trees[root_id];
        if (members.empty()) continue;
        int root = -1;
        for (int v : members)
            if (adj[v].size() <= 1) {
                root = v;
                break;
            }
        // members are sorted, so this is the lowest-index leaf
        std::vector<int> queue{root};
        std::vector<bool> visited(n, false);
        visited[root] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            out.sequence.push_back(v);
            for (int w : adj[v])
                if (!visited[w]) {
                    visited[w] = true;
                    queue.push_back(w);
                }
        }
    }
    return out;
}

std::vector<Ordering> enumerate_compatible_orderings(const WeightedGraph& g, const Forest& f,
                                                     std::size_t limit) {
    const int n = g.vertex_count();
    const auto adj = f.adjacency(n);

    std::vector<Ordering> found;
    std::vector<int> prefix;
    std::vector<bool> seen(n, false);

    auto extend = [&](auto&& self) -> void {
        if (found.size() >= limit) return;
        if (static_cast<int>(prefix.size()) == n) {
            found.push_back(Ordering{prefix, f});
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (seen[v]) continue;
            int chosen_neighbors = 0;
            for (int w : adj[v]) chosen_neighbors += seen[w] ? 1 : 0;
            if (chosen_neighbors > 1) continue;  // no longer a leaf of the rest
            seen[v] = true;
            prefix.push_back(v);
            self(self);
            prefix.pop_back();
            seen[v] = false;
        }
    };
    extend(extend);
    return found;
}

Ordering mcs_ordering(const WeightedGraph& g) {
    const int n = g.vertex_count();
    const auto adj = g.adjacency();
    std::vector<bool> selected(n, false);
    std::vector<int> count(n, 0);
    Ordering out;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!selected[v] && (best == -1 || count[v] > count[best])) best = v;
        selected[best] = true;
        out.sequence.push_back(best);
        for (int w : adj[best])
            if (!selected[w]) ++count[w];
    }
    return out;
}

std::vector<WeightedEdge> essential_edges(const WeightedGraph& g) {
    std::vector<WeightedEdge> out;
    for (const auto& e : g.edges) {
        Dsu dsu(g.vertex_count());
        for (const auto& heavier : g.edges)
            if (heavier.weight > e.weight) dsu.unite(heavier.u, heavier.v);
        if (dsu.find(e.u) != dsu.find(e.v)) out.push_back(e);
    }
    return out;
}

CliqueIntersectionReport clique_intersection_holds(const Arrangement& arr, const Forest& f) {
    const int n = static_cast<int>(arr.size());
    const auto adj = f.adjacency(n);

    // Walk every forest path from each start vertex; along the way the
    // running intersection of all subspaces on the path must match the
    // direct intersection of the two endpoints.
    CliqueIntersectionReport report;
    for (int start = 0; start < n; ++start) {
        std::vector<int> path{start};
        Matrix running = arr.component(start).basis;
        auto walk = [&](auto&& self, int v, int parent, Matrix carried) -> bool {
            for (int w : adj[v]) {
                if (w == parent) continue;
                Matrix next = row_space_intersect(carried, arr.component(w).basis);
                path.push_back(w);
                if (path.size() >= 3) {
                    const Matrix direct =
                        row_space_intersect(arr.component(start).basis, arr.component(w).basis);
                    if (!(same_row_space(direct, next))) {
                        report.ok = false;
                        report.witness_path = path;
                        return false;
                    }
                }
                if (!self(self, w, v, next)) return false;
                path.pop_back();
            }
            return true;
        };
        if (!walk(walk, start, -1, running)) return report;
    }
    return report;
}

}  // namespace smallarr
