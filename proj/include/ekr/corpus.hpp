#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ekr/complex.hpp"
#include "ekr/graph.hpp"
#include "ekr/io.hpp"
#include "ekr/report.hpp"
#include "ekr/shift.hpp"

namespace ekr {

/// One corpus element.  The simplicial complex is always populated (for
/// graph families it is the independence complex); the other fields carry
/// whatever extra structure the family provides.
struct Instance {
    std::string source;
    SimplicialComplex complex;
    std::optional<Graph> graph;
    std::optional<SimplicialComplex> second; // complex-pairs
    std::optional<std::pair<int, int>> coned; // coned-boundaries: (n, k)
    std::optional<std::pair<int, int>> parts_nm; // disjoint-unions: (#parts, #parts meeting the depth-1 criterion)

    json data() const {
        json j;
        if (graph) j = to_json(*graph);
        else if (second) j = json{{"type", "complex-pair"}, {"first", to_json(complex)}, {"second", to_json(*second)}};
        else j = to_json(complex);
        if (coned) j["coned"] = json::array({coned->first, coned->second});
        if (parts_nm) j["parts"] = json::array({parts_nm->first, parts_nm->second});
        return j;
    }

    /// Rebuilds an instance from its serialized payload (witness replay).
    static Instance from_json(std::string source, const json& j) {
        Instance inst;
        inst.source = std::move(source);
        std::string type = j.value("type", "complex");
        if (type == "graph") {
            Graph g(j.at("n").get<int>());
            for (const auto& e : j.at("edges")) g.add_edge(e[0].get<int>(), e[1].get<int>());
            inst.complex = independence_complex(g);
            inst.graph = std::move(g);
        } else if (type == "complex-pair") {
            inst.complex = complex_from_json(j.at("first"));
            inst.second = complex_from_json(j.at("second"));
        } else {
            inst.complex = complex_from_json(j);
        }
        if (j.contains("coned")) inst.coned = {j["coned"][0].get<int>(), j["coned"][1].get<int>()};
        if (j.contains("parts")) inst.parts_nm = {j["parts"][0].get<int>(), j["parts"][1].get<int>()};
        return inst;
    }

    std::string digest_str() const { return graph ? digest(*graph) : digest(complex); }
};

namespace detail {

inline SimplicialComplex random_complex(int n_max, double density, SplitMix64& rng) {
    while (true) {
        int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max)));
        int nfacets = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n + 2)));
        std::vector<Face> facets;
        for (int i = 0; i < nfacets; ++i) {
            std::uint64_t m = 0;
            for (int v = 1; v <= n; ++v)
                if (static_cast<double>(rng.next() >> 11) * 0x1.0p-53 < density) m |= std::uint64_t{1} << (v - 1);
            if (m) facets.push_back(Face::from_mask(m));
        }
        if (facets.empty()) continue;
        return normalized(SimplicialComplex::from_facets(std::move(facets)));
    }
}

/// A cone over a random complex, or such a cone with extra facets avoiding
/// the apex whose boundaries lie in the cone's link.  Apex is vertex 1.
inline SimplicialComplex random_near_cone(int n_max, SplitMix64& rng) {
    SimplicialComplex base = random_complex(n_max - 1, 0.55, rng);
    SimplicialComplex cone = join(SimplicialComplex::simplex(1), base);
    if (rng.below(2) == 0) return cone;

    SimplicialComplex lk = link(cone, Face::singleton(1));
    std::vector<Face> extra;
    int n = cone.vertex_count();
    for (int tries = 0; tries < 8; ++tries) {
        std::uint64_t m = 0;
        for (int v = 2; v <= n; ++v)
            if (rng.below(2)) m |= std::uint64_t{1} << (v - 1);
        Face cand = Face::from_mask(m);
        if (cand.empty() || cone.has_face(cand)) continue;
        bool boundary_ok = true;
        for (int v : cand.vertices())
            if (!lk.has_face(cand.without(v))) { boundary_ok = false; break; }
        if (boundary_ok) extra.push_back(cand);
    }
    std::vector<Face> gen(cone.facets().begin(), cone.facets().end());
    gen.insert(gen.end(), extra.begin(), extra.end());
    return SimplicialComplex::from_facets(std::move(gen), n);
}

inline std::vector<Graph> small_graph_catalog() {
    // Connected and disconnected representatives on up to 3 vertices.
    std::vector<Graph> cat;
    cat.push_back(Graph(1));                            // K1
    cat.push_back(Graph(2));                            // E2
    cat.push_back(complete_graph(2));                   // K2
    cat.push_back(Graph(3));                            // E3
    cat.push_back(Graph::from_edges(3, {{1, 2}}));      // K2 + K1
    cat.push_back(path_graph(3));                       // P3
    cat.push_back(complete_graph(3));                   // K3
    return cat;
}

} // namespace detail

/// Deterministic expansion of a named corpus family.
///
/// Families (parameters comma-separated after a colon):
///   all-graphs:n=5                all labeled graphs on 1..n vertices
///   graphs-with-isolated:n=5      those with at least one isolated vertex
///   chordal:n=5                   chordal labeled graphs
///   threshold:n=5                 threshold labeled graphs
///   cycles:n=4..8                 cyclic graphs
///   simplexes:n=4..8              full simplexes
///   random-complexes:count=200,n=7,density=0.5,seed=1
///   near-cones:count=200,n=7,seed=1
///   shifted:count=100,n=6,seed=1  shifts of random complexes
///   complex-pairs:count=100,n=5,seed=1
///   coned-boundaries:n=3,k=5      all (n',k') with 2 <= n' < k' <= k, n' <= n
///   disjoint-unions:parts=4       unions of <= parts catalog graphs, one isolated vertex
///   file:path.cplx                a single complex from disk
///   graph-file:path               a single graph from disk
struct CorpusSpec {
    std::string family;
    std::map<std::string, std::string> params;

    static CorpusSpec parse(const std::string& text) {
        CorpusSpec spec;
        auto colon = text.find(':');
        spec.family = text.substr(0, colon);
        if (colon != std::string::npos) {
            std::string rest = text.substr(colon + 1);
            if (spec.family == "file" || spec.family == "graph-file") {
                spec.params["path"] = rest;
                return spec;
            }
            std::size_t pos = 0;
            while (pos < rest.size()) {
                auto comma = rest.find(',', pos);
                std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                auto eq = item.find('=');
                if (eq == std::string::npos) throw input_error("corpus parameter '" + item + "' is not key=value");
                spec.params[item.substr(0, eq)] = item.substr(eq + 1);
                pos = comma == std::string::npos ? rest.size() : comma + 1;
            }
        }
        return spec;
    }

    long long num(const std::string& key, long long dflt) const {
        auto it = params.find(key);
        return it == params.end() ? dflt : std::stoll(it->second);
    }

    double real(const std::string& key, double dflt) const {
        auto it = params.find(key);
        return it == params.end() ? dflt : std::stod(it->second);
    }

    /// Range "a..b" or a single value "a" (giving a..a).
    std::pair<int, int> range(const std::string& key, int lo, int hi) const {
        auto it = params.find(key);
        if (it == params.end()) return {lo, hi};
        const std::string& s = it->second;
        auto dots = s.find("..");
        if (dots == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    }

    std::vector<Instance> expand(const ShiftConfig& shift_cfg = {}) const;
};

inline std::vector<Instance> CorpusSpec::expand(const ShiftConfig& shift_cfg) const {
    std::vector<Instance> out;
    auto add_graph = [&](Graph g, std::string source) {
        Instance inst;
        inst.source = std::move(source);
        inst.complex = independence_complex(g);
        inst.graph = std::move(g);
        out.push_back(std::move(inst));
    };

    if (family == "all-graphs" || family == "graphs-with-isolated" || family == "chordal" ||
        family == "threshold") {
        int nmax = static_cast<int>(num("n", 5));
        for (int n = 1; n <= nmax; ++n) {
            auto graphs = all_labeled_graphs(n);
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                const Graph& g = graphs[i];
                if (family == "graphs-with-isolated") {
                    bool iso = false;
                    for (int v = 1; v <= n && !iso; ++v) iso = g.degree(v) == 0;
                    if (!iso) continue;
                } else if (family == "chordal") {
                    if (!is_chordal(g)) continue;
                } else if (family == "threshold") {
                    if (!is_threshold(g)) continue;
                }
                add_graph(g, family + ":n=" + std::to_string(n) + ":idx=" + std::to_string(i));
            }
        }
        return out;
    }

    if (family == "cycles") {
        auto [lo, hi] = range("n", 4, 8);
        for (int n = std::max(3, lo); n <= hi; ++n)
            add_graph(cycle_graph(n), "cycles:n=" + std::to_string(n));
        return out;
    }

    if (family == "simplexes") {
        auto [lo, hi] = range("n", 4, 8);
        for (int n = std::max(1, lo); n <= hi; ++n) {
            Instance inst;
            inst.source = "simplexes:n=" + std::to_string(n);
            inst.complex = SimplicialComplex::simplex(n);
            out.push_back(std::move(inst));
        }
        return out;
    }

    if (family == "random-complexes") {
        long long count = num("count", 200);
        int nmax = static_cast<int>(num("n", 7));
        double density = real("density", 0.5);
        SplitMix64 rng(static_cast<std::uint64_t>(num("seed", 1)));
        for (long long i = 0; i < count; ++i) {
            Instance inst;
            inst.source = "random-complexes:idx=" + std::to_string(i);
            inst.complex = detail::random_complex(nmax, density, rng);
            out.push_back(std::move(inst));
        }
        return out;
    }

    if (family == "near-cones") {
        long long count = num("count", 200);
        int nmax = static_cast<int>(num("n", 7));
        SplitMix64 rng(static_cast<std::uint64_t>(num("seed", 1)));
        for (long long i = 0; i < count; ++i) {
            Instance inst;
            inst.source = "near-cones:idx=" + std::to_string(i);
            inst.complex = detail::random_near_cone(nmax, rng);
            out.push_back(std::move(inst));
        }
        return out;
    }

    if (family == "shifted") {
        long long count = num("count", 100);
        int nmax = static_cast<int>(num("n", 6));
        SplitMix64 rng(static_cast<std::uint64_t>(num("seed", 1)));
        for (long long i = 0; i < count; ++i) {
            Instance inst;
            inst.source = "shifted:idx=" + std::to_string(i);
            inst.complex = exterior_shift(detail::random_complex(nmax, 0.5, rng), shift_cfg).shifted;
            out.push_back(std::move(inst));
        }
        return out;
    }

    if (family == "complex-pairs") {
        long long count = num("count", 100);
        int nmax = static_cast<int>(num("n", 5));
        SplitMix64 rng(static_cast<std::uint64_t>(num("seed", 1)));
        for (long long i = 0; i < count; ++i) {
            Instance inst;
            inst.source = "complex-pairs:idx=" + std::to_string(i);
            inst.complex = detail::random_complex(nmax, 0.5, rng);
            inst.second = detail::random_complex(nmax, 0.5, rng);
            out.push_back(std::move(inst));
        }
        return out;
    }

    if (family == "coned-boundaries") {
        int nmax = static_cast<int>(num("n", 3));
        int kmax = static_cast<int>(num("k", 5));
        for (int n = 2; n <= nmax; ++n) {
            for (int k = n + 1; k <= kmax; ++k) {
                Instance inst;
                inst.source = "coned-boundaries:n=" + std::to_string(n) + ":k=" + std::to_string(k);
                inst.complex = coned_boundary(n, k);
                inst.coned = {n, k};
                out.push_back(std::move(inst));
            }
        }
        return out;
    }

    if (family == "disjoint-unions") {
        int max_parts = static_cast<int>(num("parts", 4));
        auto catalog = detail::small_graph_catalog();
        // Multisets of up to max_parts-1 catalog entries, prepended with K1.
        std::vector<std::vector<std::size_t>> picks;
        std::vector<std::size_t> cur;
        auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
            picks.push_back(cur);
            if (remaining == 0) return;
            for (std::size_t i = start; i < catalog.size(); ++i) {
                cur.push_back(i);
                self(self, i, remaining - 1);
                cur.pop_back();
            }
        };
        rec(rec, 0, max_parts - 1);

        for (std::size_t pi = 0; pi < picks.size(); ++pi) {
            std::vector<Graph> parts{Graph(1)}; // the guaranteed isolated vertex
            int m = 0;
            for (std::size_t ci : picks[pi]) {
                const Graph& g = catalog[ci];
                parts.push_back(g);
                if (g.vertex_count() > 1 && is_connected(complement(g))) ++m;
            }
            Instance inst;
            inst.source = "disjoint-unions:idx=" + std::to_string(pi);
            Graph g = disjoint_union(parts);
            inst.complex = independence_complex(g);
            inst.graph = std::move(g);
            inst.parts_nm = {static_cast<int>(parts.size()), m};
            out.push_back(std::move(inst));
        }
        return out;
    }

    if (family == "file") {
        Instance inst;
        inst.source = "file:" + params.at("path");
        inst.complex = read_cplx_file(params.at("path"));
        out.push_back(std::move(inst));
        return out;
    }

    if (family == "graph-file") {
        Graph g = read_dimacs_file(params.at("path"));
        add_graph(std::move(g), "graph-file:" + params.at("path"));
        return out;
    }

    throw input_error("unknown corpus family '" + family + "'");
}

} // namespace ekr
