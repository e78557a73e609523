#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ekr/complex.hpp"
#include "ekr/gf.hpp"

namespace ekr {

/// Finite simple graph on 1-based vertices, adjacency kept as per-vertex
/// bit masks.  No loops; adjacency is symmetric by construction.
class Graph {
public:
    explicit Graph(int n = 0) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
        if (n < 0 || n > Face::max_vertices) throw input_error("graph vertex count out of range");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw input_error("loop edge " + std::to_string(u));
        adj_[static_cast<std::size_t>(u - 1)] |= bit(v);
        adj_[static_cast<std::size_t>(v - 1)] |= bit(u);
    }

    int vertex_count() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u - 1)] & bit(v);
    }

    std::uint64_t neighbors_mask(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v - 1)];
    }

    int degree(int v) const { return std::popcount(neighbors_mask(v)); }

    long long edge_count() const {
        long long twice = 0;
        for (std::uint64_t m : adj_) twice += std::popcount(m);
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 1; u <= n_; ++u)
            for (int v = u + 1; v <= n_; ++v)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    std::uint64_t full_mask() const { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }
    void check_vertex(int v) const {
        if (v < 1 || v > n_) throw domain_error("vertex " + std::to_string(v) + " out of range");
    }

    int n_;
    std::vector<std::uint64_t> adj_;
};

/// N[v]: the vertex together with all its neighbors.
inline Face closed_neighborhood(const Graph& g, int v) {
    return Face::from_mask(g.neighbors_mask(v) | (std::uint64_t{1} << (v - 1)));
}

/// Induced subgraph on the kept vertices, relabeled order-preservingly.
inline Graph induced_subgraph(const Graph& g, Face keep) {
    auto vs = keep.vertices();
    Graph out(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) out.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return out;
}

inline Graph complement(const Graph& g) {
    Graph out(g.vertex_count());
    for (int u = 1; u <= g.vertex_count(); ++u)
        for (int v = u + 1; v <= g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        int v = std::countr_zero(frontier) + 1;
        frontier &= frontier - 1;
        std::uint64_t fresh = g.neighbors_mask(v) & ~seen;
        seen |= fresh;
        frontier |= fresh;
    }
    return seen == g.full_mask();
}

inline Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    for (const Graph& g : parts) n += g.vertex_count();
    Graph out(n);
    int base = 0;
    for (const Graph& g : parts) {
        for (auto [u, v] : g.edges()) out.add_edge(base + u, base + v);
        base += g.vertex_count();
    }
    return out;
}

/// D(G): append one isolated vertex.
inline Graph d_op(const Graph& g) {
    Graph out(g.vertex_count() + 1);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    return out;
}

/// S(G): append one dominating vertex.
inline Graph s_op(const Graph& g) {
    Graph out = d_op(g);
    int v = out.vertex_count();
    for (int u = 1; u < v; ++u) out.add_edge(u, v);
    return out;
}

/// Independence complex: facets are the maximal independent sets, found by
/// pivoted Bron-Kerbosch clique enumeration on the complement graph.
inline SimplicialComplex independence_complex(const Graph& g) {
    const int n = g.vertex_count();
    Graph h = complement(g);
    std::vector<Face> facets;

    auto bk = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
        if (p == 0 && x == 0) {
            facets.push_back(Face::from_mask(r));
            return;
        }
        std::uint64_t px = p | x;
        int pivot = 0, best = -1;
        for (std::uint64_t m = px; m; m &= m - 1) {
            int v = std::countr_zero(m) + 1;
            int deg = std::popcount(p & h.neighbors_mask(v));
            if (deg > best) { best = deg; pivot = v; }
        }
        std::uint64_t cand = p & ~h.neighbors_mask(pivot);
        for (std::uint64_t m = cand; m; m &= m - 1) {
            int v = std::countr_zero(m) + 1;
            std::uint64_t vb = std::uint64_t{1} << (v - 1);
            self(self, r | vb, p & h.neighbors_mask(v), x & h.neighbors_mask(v));
            p &= ~vb;
            x |= vb;
        }
    };
    bk(bk, 0, g.vertex_count() == 0 ? 0 : h.full_mask(), 0);
    return SimplicialComplex::from_facets(std::move(facets), n);
}

namespace detail {

/// Lexicographic BFS visit order.
inline std::vector<int> lex_bfs_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<int> order;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (pick < 0 || label[static_cast<std::size_t>(v)] > label[static_cast<std::size_t>(pick)]) pick = v;
        }
        used[static_cast<std::size_t>(pick)] = true;
        order.push_back(pick + 1);
        for (std::uint64_t m = g.neighbors_mask(pick + 1); m; m &= m - 1) {
            int u = std::countr_zero(m);
            if (!used[static_cast<std::size_t>(u)]) label[static_cast<std::size_t>(u)].push_back(n - step);
        }
    }
    return order;
}

} // namespace detail

/// Chordal: every induced cycle is a triangle.  Recognized by checking
/// whether the reverse of a lexicographic BFS order is a perfect
/// elimination ordering.
inline bool is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 2) return true;
    std::vector<int> order = detail::lex_bfs_order(g);
    std::reverse(order.begin(), order.end()); // candidate PEO
    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)] - 1)] = i;

    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        std::uint64_t later = 0;
        for (std::uint64_t m = g.neighbors_mask(v); m; m &= m - 1) {
            int u = std::countr_zero(m) + 1;
            if (pos[static_cast<std::size_t>(u - 1)] > i) later |= std::uint64_t{1} << (u - 1);
        }
        if (!later) continue;
        int parent = 0, bestpos = n + 1;
        for (std::uint64_t m = later; m; m &= m - 1) {
            int u = std::countr_zero(m) + 1;
            if (pos[static_cast<std::size_t>(u - 1)] < bestpos) { bestpos = pos[static_cast<std::size_t>(u - 1)]; parent = u; }
        }
        std::uint64_t rest = later & ~(std::uint64_t{1} << (parent - 1));
        if (rest & ~g.neighbors_mask(parent)) return false;
    }
    return true;
}

inline bool is_cochordal(const Graph& g) { return is_chordal(complement(g)); }

/// Threshold recognition: repeatedly strip a vertex that is currently
/// isolated or dominating.  On success returns the build word (applied to a
/// single vertex left to right, 'D' = isolated append, 'S' = dominating
/// append).
inline std::optional<std::string> is_threshold(const Graph& g) {
    if (g.vertex_count() < 1) throw domain_error("threshold test needs at least one vertex");
    std::uint64_t remaining = g.full_mask();
    std::string strip;
    while (std::popcount(remaining) > 1) {
        int found = 0;
        char op = 0;
        for (std::uint64_t m = remaining; m; m &= m - 1) {
            int v = std::countr_zero(m) + 1;
            std::uint64_t deg = g.neighbors_mask(v) & remaining;
            if (deg == 0) { found = v; op = 'D'; break; }
            if (deg == (remaining & ~(std::uint64_t{1} << (v - 1)))) { found = v; op = 'S'; break; }
        }
        if (!found) return std::nullopt;
        strip += op;
        remaining &= ~(std::uint64_t{1} << (found - 1));
    }
    std::reverse(strip.begin(), strip.end());
    return strip;
}

/// Rebuild a graph from a single vertex by the given D/S word.
inline Graph build_from_word(std::string_view word) {
    Graph g(1);
    for (char c : word) {
        if (c == 'D') g = d_op(g);
        else if (c == 'S') g = s_op(g);
        else throw input_error("build word may contain only D and S");
    }
    return g;
}

/// Decomposition of a graph whose independence complex is a near-cone:
/// G = S^k D(core) where the apex vertex has k neighbors (all of them
/// dominating) and core = G minus the apex's closed neighborhood.  For the
/// single-vertex graph the decomposition is degenerate; it is reported with
/// trivial = true and the graph itself as core.
struct FlagNearConeDecomposition {
    int k = 0;
    Graph core;
    int apex = 0;
    bool trivial = false;
};

inline std::optional<FlagNearConeDecomposition> flag_nearcone_decompose(const Graph& g) {
    auto apexes = near_cone_apexes(independence_complex(g));
    if (apexes.empty()) return std::nullopt;
    int v = apexes.front();
    if (g.vertex_count() == 1) return FlagNearConeDecomposition{0, g, v, true};
    Face keep = Face::from_mask(g.full_mask() & ~closed_neighborhood(g, v).mask());
    return FlagNearConeDecomposition{g.degree(v), induced_subgraph(g, keep), v, false};
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw domain_error("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n, 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    Graph g(n);
    int ubase = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int vbase = ubase + parts[i];
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            for (int u = 1; u <= parts[i]; ++u)
                for (int v = 1; v <= parts[j]; ++v) g.add_edge(ubase + u, vbase + v);
            vbase += parts[j];
        }
        ubase += parts[i];
    }
    return g;
}

inline Graph erdos_renyi(int n, double density, std::uint64_t seed) {
    Graph g(n);
    SplitMix64 rng(seed);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (static_cast<double>(rng.next() >> 11) * 0x1.0p-53 < density) g.add_edge(u, v);
    return g;
}

/// All 2^C(n,2) labeled graphs on n vertices; guarded to n <= 6.
inline std::vector<Graph> all_labeled_graphs(int n) {
    if (n > 6) throw resource_error("labeled graph corpus limited to n <= 6");
    if (n < 1) throw domain_error("need at least one vertex");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << pairs.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
        out.push_back(std::move(g));
    }
    return out;
}

/// Boundary of the simplex on n+1 vertices with k fresh cone points joined
/// over each facet: facets are F_i ∪ P_i with |F_i| = n, |P_i| = k, giving a
/// pure complex on (n+1)(k+1) vertices.
inline SimplicialComplex coned_boundary(int n, int k) {
    if (n < 1 || k < 1) throw domain_error("coned boundary needs n >= 1, k >= 1");
    int total = (n + 1) * (k + 1);
    if (total > Face::max_vertices) throw resource_error("coned boundary exceeds 64 vertices");
    std::vector<Face> facets;
    for (int i = 1; i <= n + 1; ++i) {
        std::uint64_t base = ((std::uint64_t{1} << (n + 1)) - 1) & ~(std::uint64_t{1} << (i - 1));
        std::uint64_t cone = ((std::uint64_t{1} << k) - 1) << (n + 1 + (i - 1) * k);
        facets.push_back(Face::from_mask(base | cone));
    }
    return SimplicialComplex::from_facets(std::move(facets), total);
}

} // namespace ekr
