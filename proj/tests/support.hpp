#pragma once

// Shared test utilities: brute-force oracle implementations (kept independent
// of the library's algorithmic paths) and seeded instance generators.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "smallarr/arrangement.hpp"
#include "smallarr/chordal.hpp"
#include "smallarr/errors.hpp"
#include "smallarr/forest.hpp"
#include "smallarr/generate.hpp"
#include "smallarr/rng.hpp"

namespace test_support {

using namespace smallarr;

/// All spanning forests of g by exhaustive edge-subset enumeration: acyclic
/// subsets whose edge count is (vertices - connected components).
inline std::vector<Forest> all_spanning_forests(const WeightedGraph& g) {
    const int n = g.vertex_count();
    const auto ids = g.component_ids();
    const int comp_count =
        static_cast<int>(std::set<int>(ids.begin(), ids.end()).size());
    const int want = n - comp_count;
    const std::size_t m = g.edges.size();

    std::vector<Forest> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (std::popcount(mask) != want) continue;
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool acyclic = true;
        Forest f;
        for (std::size_t e = 0; e < m && acyclic; ++e) {
            if (!(mask >> e & 1)) continue;
            const int a = find(g.edges[e].u), b = find(g.edges[e].v);
            if (a == b)
                acyclic = false;
            else {
                parent[a] = b;
                f.edges.emplace_back(g.edges[e].u, g.edges[e].v);
            }
        }
        if (acyclic) {
            std::sort(f.edges.begin(), f.edges.end());
            out.push_back(std::move(f));
        }
    }
    return out;
}

/// Spanning forests attaining the minimal weighted Euler characteristic.
inline std::vector<Forest> minimal_forests(const WeightedGraph& g) {
    auto forests = all_spanning_forests(g);
    long long best = 0;
    bool first = true;
    for (const auto& f : forests) {
        const long long chi = weighted_euler_char(g, f);
        if (first || chi < best) best = chi, first = false;
    }
    std::vector<Forest> out;
    for (auto& f : forests)
        if (weighted_euler_char(g, f) == best) out.push_back(std::move(f));
    return out;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Random arrangement without a smallness guarantee: a mix of guaranteed-small
/// instances, coordinate arrangements of random graphs, and components drawn
/// from a shared vector pool (which tends to create rich intersections).
inline Arrangement random_arrangement(std::uint64_t seed, int max_components = 6,
                                      int max_ambient = 8) {
    Rng rng(seed);
    const int strategy = static_cast<int>(rng.int_in(0, 2));
    if (strategy == 0) {
        const int ambient = static_cast<int>(rng.int_in(2, max_ambient));
        const int comps = static_cast<int>(rng.int_in(1, std::min(max_components, ambient)));
        return random_small_arrangement(comps, ambient, rng.next());
    }
    if (strategy == 1) {
        const int n = static_cast<int>(rng.int_in(2, std::min(max_ambient, 6)));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.int_in(0, 99) < 45) edges.emplace_back(u, v);
        const Arrangement arr =
            coordinate_arrangement(SimpleGraph::create(n, std::move(edges)));
        if (static_cast<int>(arr.size()) <= max_components) return arr;
        std::vector<int> keep(max_components);
        std::iota(keep.begin(), keep.end(), 0);
        return arr.restricted_to(keep);
    }
    // shared-pool construction; retried until the components are incomparable
    for (;;) {
        const int ambient = static_cast<int>(rng.int_in(3, max_ambient));
        const int pool_size = ambient + 2;
        Matrix pool(static_cast<std::size_t>(pool_size), static_cast<std::size_t>(ambient));
        for (std::size_t r = 0; r < pool.rows(); ++r)
            for (std::size_t c = 0; c < pool.cols(); ++c)
                pool.at(r, c) = Rational(rng.int_in(-2, 2));
        const int comps = static_cast<int>(rng.int_in(2, max_components));
        std::vector<Subspace> subs;
        for (int i = 0; i < comps; ++i) {
            const int take = static_cast<int>(rng.int_in(1, 3));
            Matrix basis(0, static_cast<std::size_t>(ambient));
            for (int t = 0; t < take; ++t)
                basis.append_row(pool.row(static_cast<std::size_t>(
                    rng.int_in(0, pool_size - 1))));
            basis = rref(basis);
            if (basis.rows() == 0) continue;
            subs.push_back(Subspace{"C" + std::to_string(i), basis});
        }
        try {
            return Arrangement::create(static_cast<std::size_t>(ambient), std::move(subs));
        } catch (const input_error&) {
            continue;  // comparable pair drawn; redraw everything
        }
    }
}

/// Random connected chordal graph: start from a random tree and add fill-in
/// edges by eliminating vertices in a random order.
inline SimpleGraph random_chordal_graph(std::uint64_t seed, int n) {
    Rng rng(seed);
    std::set<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng.int_in(0, v - 1));
        edges.insert({u, v});
    }
    for (int extra = rng.int_in(0, n); extra > 0; --extra) {
        int u = static_cast<int>(rng.int_in(0, n - 1));
        int v = static_cast<int>(rng.int_in(0, n - 1));
        if (u != v) edges.insert({std::min(u, v), std::max(u, v)});
    }
    // eliminate in a random permutation, connecting later neighbors
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[static_cast<int>(rng.int_in(0, i))]);
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        std::vector<int> later;
        for (int w = 0; w < n; ++w)
            if (position[w] > i &&
                edges.count({std::min(v, w), std::max(v, w)}) != 0)
                later.push_back(w);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                edges.insert({std::min(later[a], later[b]), std::max(later[a], later[b])});
    }
    return SimpleGraph::create(n, {edges.begin(), edges.end()});
}

inline bool is_coordinate_arrangement(const Arrangement& arr) {
    for (const auto& sub : arr.components())
        for (std::size_t r = 0; r < sub.basis.rows(); ++r) {
            int nonzero = 0;
            for (std::size_t c = 0; c < sub.basis.cols(); ++c)
                if (sub.basis.at(r, c) != 0) ++nonzero;
            if (nonzero != 1) return false;
        }
    return true;
}

}  // namespace test_support
