#include "smallarr/chordal.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "smallarr/errors.hpp"
#include "smallarr/forest.hpp"

namespace smallarr {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> neighbor_masks(const SimpleGraph& g) {
    std::vector<Mask> nbr(g.n, 0);
    for (const auto& [u, v] : g.edges) {
        nbr[u] |= Mask{1} << v;
        nbr[v] |= Mask{1} << u;
    }
    return nbr;
}

void bron_kerbosch(Mask r, Mask p, Mask x, const std::vector<Mask>& nbr,
                   std::vector<Mask>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // pivot: vertex of p|x with the most neighbors inside p
    int pivot = -1, best = -1;
    for (Mask px = p | x; px != 0; px &= px - 1) {
        const int v = std::countr_zero(px);
        const int cnt = std::popcount(p & nbr[v]);
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    for (Mask cand = p & ~nbr[pivot]; cand != 0; cand &= cand - 1) {
        const int v = std::countr_zero(cand);
        const Mask bit = Mask{1} << v;
        bron_kerbosch(r | bit, p & nbr[v], x & nbr[v], nbr, out);
        p &= ~bit;
        x |= bit;
    }
}

std::vector<int> mask_to_vertices(Mask m) {
    std::vector<int> out;
    for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

}  // namespace

SimpleGraph SimpleGraph::create(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw input_error("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw input_error("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw input_error("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return SimpleGraph{n, std::move(edges)};
}

bool SimpleGraph::adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

bool SimpleGraph::connected() const {
    if (n <= 1) return true;
    const auto adj = adjacency();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

CliqueComplex maximal_cliques(const SimpleGraph& g) {
    if (g.n > 31) throw input_error("maximal_cliques supports up to 31 vertices");
    const auto nbr = neighbor_masks(g);
    std::vector<Mask> raw;
    if (g.n > 0) bron_kerbosch(0, (Mask{1} << g.n) - 1, 0, nbr, raw);
    CliqueComplex complex;
    for (Mask m : raw) complex.facets.push_back(mask_to_vertices(m));
    std::sort(complex.facets.begin(), complex.facets.end());
    return complex;
}

Arrangement coordinate_arrangement(const SimpleGraph& g) {
    if (g.n < 1) throw input_error("coordinate_arrangement needs at least one vertex");
    const CliqueComplex complex = maximal_cliques(g);
    std::vector<Subspace> subs;
    for (const auto& facet : complex.facets) {
        Matrix basis(facet.size(), g.n);
        for (std::size_t r = 0; r < facet.size(); ++r) basis.at(r, facet[r]) = 1;
        std::string name = "F";
        for (std::size_t r = 0; r < facet.size(); ++r)
            name += (r == 0 ? "" : "_") + std::to_string(facet[r]);
        subs.push_back(Subspace{name, basis});
    }
    return Arrangement::create(g.n, std::move(subs));
}

std::vector<int> find_chordless_cycle(const SimpleGraph& g) {
    if (g.n > 20) return {};
    const auto nbr = neighbor_masks(g);
    for (Mask subset = 0; subset < (Mask{1} << g.n); ++subset) {
        const int size = std::popcount(subset);
        if (size < 4) continue;
        // induced subgraph must be 2-regular and connected, i.e. one cycle
        bool regular = true;
        int edge_count = 0;
        for (Mask m = subset; m != 0 && regular; m &= m - 1) {
            const int v = std::countr_zero(m);
            const int deg = std::popcount(nbr[v] & subset);
            regular = deg == 2;
            edge_count += deg;
        }
        if (!regular || edge_count != 2 * size) continue;
        // walk the cycle to confirm connectivity and report it in path order
        const int start = std::countr_zero(subset);
        std::vector<int> cycle{start};
        Mask visited = Mask{1} << start;
        int current = start;
        while (true) {
            const Mask next_options = nbr[current] & subset & ~visited;
            if (next_options == 0) break;
            current = std::countr_zero(next_options);
            visited |= Mask{1} << current;
            cycle.push_back(current);
        }
        if (static_cast<int>(cycle.size()) == size) return cycle;
    }
    return {};
}

ChordalityReport is_chordal(const SimpleGraph& g) {
    ChordalityReport report;
    const auto adj = g.adjacency();

    // maximum cardinality search, ties by smallest index
    std::vector<int> order;
    {
        std::vector<bool> selected(g.n, false);
        std::vector<int> count(g.n, 0);
        for (int step = 0; step < g.n; ++step) {
            int best = -1;
            for (int v = 0; v < g.n; ++v)
                if (!selected[v] && (best == -1 || count[v] > count[best])) best = v;
            selected[best] = true;
            order.push_back(best);
            for (int w : adj[best])
                if (!selected[w]) ++count[w];
        }
    }

    std::vector<int> peo(order.rbegin(), order.rend());
    std::vector<int> position(g.n);
    for (int i = 0; i < g.n; ++i) position[peo[i]] = i;

    report.chordal = true;
    for (int i = 0; i < g.n && report.chordal; ++i) {
        std::vector<int> later;
        for (int w : adj[peo[i]])
            if (position[w] > i) later.push_back(w);
        for (std::size_t a = 0; a < later.size() && report.chordal; ++a)
            for (std::size_t b = a + 1; b < later.size() && report.chordal; ++b)
                report.chordal = g.adjacent(later[a], later[b]);
    }

    if (report.chordal)
        report.peo = peo;
    else
        report.chordless_cycle = find_chordless_cycle(g);
    return report;
}

std::vector<QuadricProduct> stanley_reisner_quadrics(const SimpleGraph& g) {
    std::vector<QuadricProduct> out;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (g.adjacent(u, v)) continue;
            LinearForm left(g.n), right(g.n);
            left[u] = 1;
            right[v] = 1;
            out.push_back(QuadricProduct{left, right, 0});
        }
    return out;
}

std::vector<int> peo_facet_order(const SimpleGraph& g) {
    const auto adj = g.adjacency();
    std::vector<int> rank_of(g.n, 0);
    {
        std::vector<bool> selected(g.n, false);
        std::vector<int> count(g.n, 0);
        for (int step = 0; step < g.n; ++step) {
            int best = -1;
            for (int v = 0; v < g.n; ++v)
                if (!selected[v] && (best == -1 || count[v] > count[best])) best = v;
            selected[best] = true;
            rank_of[best] = step;
            for (int w : adj[best])
                if (!selected[w]) ++count[w];
        }
    }
    const CliqueComplex complex = maximal_cliques(g);
    std::vector<int> order(complex.facets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int ra = -1, rb = -1;
        for (int v : complex.facets[a]) ra = std::max(ra, rank_of[v]);
        for (int v : complex.facets[b]) rb = std::max(rb, rank_of[v]);
        if (ra != rb) return ra < rb;
        return complex.facets[a] < complex.facets[b];
    });
    return order;
}

FrobergReport froberg_check(const SimpleGraph& g) {
    FrobergReport report;
    const ChordalityReport chordality = is_chordal(g);
    const Arrangement arr = coordinate_arrangement(g);
    const SmallnessReport smallness = is_small(arr);
    report.chordal = chordality.chordal;
    report.small = smallness.small;
    report.consistent = report.chordal == report.small;

    if (report.chordal) {
        Matrix sr(0, monomial_exponents(g.n, 2).size());
        for (const auto& q : stanley_reisner_quadrics(g))
            sr.append_row(quadric_coefficients(q.left, q.right));
        const DegreePiece dp2 = degree_piece(arr, 2);
        report.quadrics_match =
            rank(sr) == dp2.rank && rank(vstack(sr, dp2.basis)) == dp2.rank;

        report.peo_order_ok = verify_linearly_joined(arr, peo_facet_order(g)).ok;

        const Ordering mcs = mcs_ordering(intersection_graph(arr));
        report.mcs_order_ok = verify_linearly_joined(arr, mcs.sequence).ok;

        report.consistent = report.consistent && report.quadrics_match && report.peo_order_ok;
    }
    return report;
}

SimpleGraph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.emplace_back(u, v);
    return SimpleGraph::create(n, std::move(edges));
}

SweepResult froberg_sweep(int n, bool connected_only, int threads) {
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    std::vector<long long> checked(threads, 0);
    std::vector<std::vector<std::uint64_t>> failures(threads);
    std::vector<std::vector<std::uint64_t>> findings(threads);
    auto worker = [&](int id) {
        for (std::uint64_t mask = id; mask < total; mask += threads) {
            const SimpleGraph g = graph_from_mask(n, mask);
            if (connected_only && !g.connected()) continue;
            ++checked[id];
            const bool oracle_chordal = find_chordless_cycle(g).empty();
            const FrobergReport report = froberg_check(g);
            if (!report.consistent || report.chordal != oracle_chordal)
                failures[id].push_back(mask);
            if (!report.mcs_order_ok) findings[id].push_back(mask);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();

    SweepResult result;
    for (int t = 0; t < threads; ++t) {
        result.checked += checked[t];
        result.failures.insert(result.failures.end(), failures[t].begin(), failures[t].end());
        result.mcs_findings.insert(result.mcs_findings.end(), findings[t].begin(),
                                   findings[t].end());
    }
    std::sort(result.failures.begin(), result.failures.end());
    std::sort(result.mcs_findings.begin(), result.mcs_findings.end());
    return result;
}

}  // namespace smallarr
