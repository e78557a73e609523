#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ekr/complex.hpp"
#include "ekr/graph.hpp"

namespace ekr {

// ---------------------------------------------------------------------------
// Complex text format (.cplx)
//
//   n 4          optional header
//   1 2          one facet per line, 1-based vertex indices
//   3 4
//
// "#" starts a comment.  A lone "0" is the empty facet, so a file whose only
// facet line is "0" is the EMPTY complex; a header with no facet lines is
// the VOID complex.
// ---------------------------------------------------------------------------

inline SimplicialComplex read_cplx(std::istream& in) {
    std::string line;
    std::vector<Face> facets;
    std::optional<int> header_n;
    bool first_content = true;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ss(line);
        std::vector<std::string> toks;
        for (std::string t; ss >> t;) toks.push_back(t);
        if (toks.empty()) continue;

        if (first_content && toks[0] == "n") {
            if (toks.size() != 2) throw input_error("line " + std::to_string(lineno) + ": header must be 'n <count>'");
            header_n = std::stoi(toks[1]);
            if (*header_n < 0 || *header_n > Face::max_vertices)
                throw input_error("vertex count out of range in header");
            first_content = false;
            continue;
        }
        first_content = false;

        if (toks.size() == 1 && toks[0] == "0") {
            facets.push_back(Face());
            continue;
        }
        std::vector<int> vs;
        for (const std::string& t : toks) {
            int v;
            try {
                v = std::stoi(t);
            } catch (const std::exception&) {
                throw input_error("line " + std::to_string(lineno) + ": bad vertex token '" + t + "'");
            }
            if (v < 1) throw input_error("line " + std::to_string(lineno) + ": vertex index must be >= 1");
            vs.push_back(v);
        }
        Face f = Face::of(vs);
        if (f.card() != static_cast<int>(vs.size()))
            throw input_error("line " + std::to_string(lineno) + ": duplicate vertex in facet");
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(std::move(facets), header_n);
}

inline SimplicialComplex read_cplx_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return read_cplx(in);
}

inline void write_cplx(std::ostream& out, const SimplicialComplex& cx) {
    out << "n " << cx.vertex_count() << "\n";
    for (Face f : cx.facets()) out << f.to_string() << "\n";
}

inline void write_cplx_file(const std::string& path, const SimplicialComplex& cx) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open '" + path + "' for writing");
    write_cplx(out, cx);
}

/// Facet lines only (no header): the CLI's text rendering of a complex.
inline std::string facet_lines(const SimplicialComplex& cx) {
    std::string s;
    for (Face f : cx.facets()) {
        s += f.to_string();
        s += '\n';
    }
    return s;
}

// ---------------------------------------------------------------------------
// Graph text format (DIMACS-like)
//
//   c comment
//   p edge 4 4
//   e 1 2
// ---------------------------------------------------------------------------

inline Graph read_dimacs(std::istream& in) {
    std::string line;
    std::optional<Graph> g;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            int n = 0;
            long long m = 0;
            if (!(ss >> kind >> n >> m) || kind != "edge")
                throw input_error("line " + std::to_string(lineno) + ": expected 'p edge <n> <m>'");
            if (n < 0 || n > Face::max_vertices) throw input_error("graph vertex count out of range");
            g.emplace(n);
            continue;
        }
        if (tag == "e") {
            if (!g) throw input_error("line " + std::to_string(lineno) + ": edge before 'p' line");
            int u = 0, v = 0;
            if (!(ss >> u >> v)) throw input_error("line " + std::to_string(lineno) + ": expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > g->vertex_count() || v > g->vertex_count())
                throw input_error("line " + std::to_string(lineno) + ": endpoint out of range");
            if (u == v) throw input_error("line " + std::to_string(lineno) + ": loop edge");
            g->add_edge(u, v);
            continue;
        }
        throw input_error("line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
    }
    if (!g) throw input_error("missing 'p edge' line");
    return *g;
}

inline Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return read_dimacs(in);
}

// ---------------------------------------------------------------------------
// Canonical serializations and digests
// ---------------------------------------------------------------------------

inline std::string canonical_string(const SimplicialComplex& cx) {
    std::string s = "complex;n=" + std::to_string(cx.vertex_count()) + ";facets=";
    bool first = true;
    for (Face f : cx.facets()) {
        if (!first) s += '|';
        first = false;
        s += f.to_string();
    }
    return s;
}

inline std::string canonical_string(const Graph& g) {
    std::string s = "graph;n=" + std::to_string(g.vertex_count()) + ";edges=";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) s += '|';
        first = false;
        s += std::to_string(u) + "-" + std::to_string(v);
    }
    return s;
}

inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t x) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[x & 0xf];
        x >>= 4;
    }
    return s;
}

inline std::string digest(const SimplicialComplex& cx) { return hex64(fnv1a64(canonical_string(cx))); }
inline std::string digest(const Graph& g) { return hex64(fnv1a64(canonical_string(g))); }

} // namespace ekr
