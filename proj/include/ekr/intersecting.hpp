#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "ekr/complex.hpp"
#include "ekr/graph.hpp"

namespace ekr {

struct SearchBudget {
    long long max_faces = 2000;        // r-faces admitted to one clique search
    long long max_mixed_faces = 1000;  // faces admitted to the mixed-cardinality search
    long long max_nodes = 1'000'000;   // node cap for maximum-clique enumeration
    long long max_bb_nodes = 50'000'000; // node cap for the optimization search
};

namespace detail {

/// Dense bitset graph used for the compatibility relation between faces.
class BitGraph {
public:
    explicit BitGraph(int n) : n_(n), words_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * words_, 0) {}

    int size() const { return n_; }
    int words() const { return words_; }

    void add_edge(int i, int j) {
        row(i)[j / 64] |= std::uint64_t{1} << (j % 64);
        row(j)[i / 64] |= std::uint64_t{1} << (i % 64);
    }

    std::uint64_t* row(int i) { return adj_.data() + static_cast<std::size_t>(i) * words_; }
    const std::uint64_t* row(int i) const { return adj_.data() + static_cast<std::size_t>(i) * words_; }

    int degree(int i) const {
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(row(i)[w]);
        return d;
    }

private:
    int n_, words_;
    std::vector<std::uint64_t> adj_;
};

using Bits = std::vector<std::uint64_t>;

inline bool bits_empty(const Bits& b) {
    for (std::uint64_t w : b) if (w) return false;
    return true;
}
inline bool bits_test(const Bits& b, int i) { return (b[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1; }
inline void bits_clear(Bits& b, int i) { b[static_cast<std::size_t>(i / 64)] &= ~(std::uint64_t{1} << (i % 64)); }

/// Exact maximum clique by branch and bound with greedy-coloring upper
/// bounds (Tomita style).  Vertices are pre-ordered by descending degree.
/// `target`: when set, enumerates every clique of exactly that size into
/// `sink` instead of optimizing (node-capped).
class CliqueSearch {
public:
    CliqueSearch(const BitGraph& g, long long node_cap) : g_(g), cap_(node_cap) {}

    long long best_size = 0;
    std::vector<int> best_clique;

    void maximize(long long incumbent, const std::vector<int>& incumbent_clique) {
        best_size = incumbent;
        best_clique = incumbent_clique;
        Bits p(static_cast<std::size_t>(g_.words()), 0);
        for (int i = 0; i < g_.size(); ++i) p[static_cast<std::size_t>(i / 64)] |= std::uint64_t{1} << (i % 64);
        cur_.clear();
        expand(p);
    }

    /// Calls sink(clique) for every clique of size exactly `target`.
    /// sink returns false to stop early.
    template <typename Sink>
    void enumerate(long long target, Sink&& sink) {
        target_ = target;
        Bits p(static_cast<std::size_t>(g_.words()), 0);
        for (int i = 0; i < g_.size(); ++i) p[static_cast<std::size_t>(i / 64)] |= std::uint64_t{1} << (i % 64);
        cur_.clear();
        stop_ = false;
        enumerate_rec(p, [&](const std::vector<int>& c) { return sink(c); });
    }

private:
    void bump() {
        if (++nodes_ > cap_) throw resource_error("clique search exceeded its node budget");
    }

    /// Greedy coloring of the candidate set; returns vertices ordered by
    /// ascending color together with their color numbers (1-based).
    void color_sort(const Bits& p, std::vector<int>& order, std::vector<int>& color) const {
        order.clear();
        color.clear();
        Bits rest = p;
        int c = 0;
        while (!bits_empty(rest)) {
            ++c;
            Bits cls = rest;
            while (!bits_empty(cls)) {
                int v = -1;
                for (std::size_t w = 0; w < cls.size(); ++w)
                    if (cls[w]) { v = static_cast<int>(w) * 64 + std::countr_zero(cls[w]); break; }
                order.push_back(v);
                color.push_back(c);
                bits_clear(rest, v);
                bits_clear(cls, v);
                const std::uint64_t* nb = g_.row(v);
                for (std::size_t w = 0; w < cls.size(); ++w) cls[w] &= ~nb[w];
            }
        }
    }

    void expand(Bits& p) {
        bump();
        std::vector<int> order, color;
        color_sort(p, order, color);
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            int v = order[static_cast<std::size_t>(idx)];
            if (static_cast<long long>(cur_.size()) + color[static_cast<std::size_t>(idx)] <= best_size) return;
            Bits next(p.size());
            const std::uint64_t* nb = g_.row(v);
            for (std::size_t w = 0; w < p.size(); ++w) next[w] = p[w] & nb[w];
            cur_.push_back(v);
            if (bits_empty(next)) {
                if (static_cast<long long>(cur_.size()) > best_size) {
                    best_size = static_cast<long long>(cur_.size());
                    best_clique = cur_;
                }
            } else {
                expand(next);
            }
            cur_.pop_back();
            bits_clear(p, v);
        }
    }

    template <typename Sink>
    bool enumerate_rec(Bits& p, Sink&& sink) {
        bump();
        if (static_cast<long long>(cur_.size()) == target_) {
            return sink(cur_);
        }
        std::vector<int> order, color;
        color_sort(p, order, color);
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            int v = order[static_cast<std::size_t>(idx)];
            if (static_cast<long long>(cur_.size()) + color[static_cast<std::size_t>(idx)] < target_) return true;
            Bits next(p.size());
            const std::uint64_t* nb = g_.row(v);
            for (std::size_t w = 0; w < p.size(); ++w) next[w] = p[w] & nb[w];
            cur_.push_back(v);
            bool keep_going = true;
            if (static_cast<long long>(cur_.size()) == target_) keep_going = sink(cur_);
            else if (!bits_empty(next)) keep_going = enumerate_rec(next, sink);
            cur_.pop_back();
            if (!keep_going) return false;
            bits_clear(p, v);
        }
        return true;
    }

    const BitGraph& g_;
    long long cap_;
    long long nodes_ = 0;
    long long target_ = 0;
    bool stop_ = false;
    std::vector<int> cur_;
};

/// Builds the t-intersection compatibility graph over the given faces,
/// with items reordered by descending compatibility degree (ties by the
/// original lex order).  `perm[i]` maps the new index i to the original one.
inline BitGraph compat_graph(const std::vector<Face>& faces, int t, std::vector<int>& perm) {
    const int n = static_cast<int>(faces.size());
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (faces[static_cast<std::size_t>(i)].intersection_card(faces[static_cast<std::size_t>(j)]) >= t) {
                ++deg[static_cast<std::size_t>(i)];
                ++deg[static_cast<std::size_t>(j)];
            }
    perm.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)]; });
    BitGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (faces[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])].intersection_card(
                    faces[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]) >= t)
                g.add_edge(i, j);
    return g;
}

} // namespace detail

/// Best star: the maximum over vertices of the number of r-faces containing
/// the vertex (= f_{r-1} of its link), with the smallest attaining vertex.
inline std::pair<long long, int> star_bound(const SimplicialComplex& cx, int r) {
    if (r < 1 || r > max_facet_card(cx)) throw domain_error("star bound: r out of range");
    std::vector<long long> count(static_cast<std::size_t>(cx.vertex_count()) + 1, 0);
    for (Face f : cx.faces_of_card(r))
        for (int v : f.vertices()) ++count[static_cast<std::size_t>(v)];
    long long best = -1;
    int bestv = 0;
    for (int v = 1; v <= cx.vertex_count(); ++v)
        if (count[static_cast<std::size_t>(v)] > best) { best = count[static_cast<std::size_t>(v)]; bestv = v; }
    return {best, bestv};
}

/// t-generalization of the star bound: the best count of r-faces containing
/// a common t-face.  For t = 1 this is star_bound.
inline std::pair<long long, Face> t_star_bound(const SimplicialComplex& cx, int r, int t) {
    if (t < 1 || r < t || r > max_facet_card(cx)) throw domain_error("t-star bound: parameters out of range");
    std::vector<Face> rfaces = cx.faces_of_card(r);
    long long best = -1;
    Face bestf;
    for (Face tau : cx.faces_of_card(t)) {
        long long c = 0;
        for (Face f : rfaces)
            if (tau.subset_of(f)) ++c;
        if (c > best) { best = c; bestf = tau; }
    }
    return {best, bestf};
}

struct MaxFamily {
    long long size = 0;
    FaceFamily witness;
};

/// Exact maximum pairwise t-intersecting family of r-faces, as a maximum
/// clique of the compatibility graph.  The best t-star seeds the incumbent,
/// so the witness is that star whenever no larger family exists.
inline MaxFamily max_intersecting(const SimplicialComplex& cx, int r, int t = 1,
                                  const SearchBudget& budget = {}) {
    if (t < 1 || r < t) throw domain_error("need r >= t >= 1");
    if (r > max_facet_card(cx)) throw domain_error("r exceeds every facet");
    std::vector<Face> faces = cx.faces_of_card(r);
    if (static_cast<long long>(faces.size()) > budget.max_faces)
        throw resource_error("too many r-faces for the clique search (" + std::to_string(faces.size()) + ")");

    auto [star_size, star_face] = t_star_bound(cx, r, t);
    std::vector<int> star_members;
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (star_face.subset_of(faces[i])) star_members.push_back(static_cast<int>(i));

    std::vector<int> perm;
    detail::BitGraph g = detail::compat_graph(faces, t, perm);
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);

    std::vector<int> seed;
    for (int m : star_members) seed.push_back(inv[static_cast<std::size_t>(m)]);
    detail::CliqueSearch search(g, budget.max_bb_nodes);
    search.maximize(star_size, seed);

    std::vector<Face> members;
    for (int i : search.best_clique) members.push_back(faces[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
    return {search.best_size, FaceFamily(r, std::move(members))};
}

/// Verdict of the r-EKR test: whether the best star is a maximum
/// intersecting r-family.
struct EkrVerdict {
    int r = 1;
    int t = 1;
    long long star_bound = 0;
    int best_star_vertex = 0; ///< smallest vertex attaining the bound (t = 1)
    Face star_face;           ///< best t-face; equals {best_star_vertex} for t = 1
    long long max_family_size = 0;
    FaceFamily witness;
    bool is_ekr = false;
    std::optional<bool> is_strict;
    double elapsed_ms = 0;
};

inline EkrVerdict is_r_ekr(const SimplicialComplex& cx, int r, int t = 1,
                           const SearchBudget& budget = {}) {
    auto t0 = std::chrono::steady_clock::now();
    EkrVerdict v;
    v.r = r;
    v.t = t;
    auto [bound, face] = t_star_bound(cx, r, t);
    v.star_bound = bound;
    v.star_face = face;
    v.best_star_vertex = t == 1 ? face.min_vertex() : 0;
    MaxFamily mf = max_intersecting(cx, r, t, budget);
    v.max_family_size = mf.size;
    v.witness = std::move(mf.witness);
    v.is_ekr = v.max_family_size <= v.star_bound;
    v.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return v;
}

struct StrictVerdict {
    bool strict = false;
    long long optimum = 0;
    std::optional<FaceFamily> nonstar_witness;
};

/// Strictly r-EKR: every maximum intersecting r-family is the full star of
/// some vertex.  Enumerates all maximum families at the known optimum and
/// checks each for a common vertex (which forces equality with that star).
inline StrictVerdict is_strict_r_ekr(const SimplicialComplex& cx, int r,
                                     const SearchBudget& budget = {}) {
    std::vector<Face> faces = cx.faces_of_card(r);
    if (static_cast<long long>(faces.size()) > budget.max_faces)
        throw resource_error("too many r-faces for the clique search");
    MaxFamily opt = max_intersecting(cx, r, 1, budget);

    std::vector<long long> star_count(static_cast<std::size_t>(cx.vertex_count()) + 1, 0);
    for (Face f : faces)
        for (int v : f.vertices()) ++star_count[static_cast<std::size_t>(v)];

    std::vector<int> perm;
    detail::BitGraph g = detail::compat_graph(faces, 1, perm);
    detail::CliqueSearch search(g, budget.max_nodes);

    StrictVerdict out;
    out.strict = true;
    out.optimum = opt.size;
    search.enumerate(opt.size, [&](const std::vector<int>& clique) {
        std::uint64_t common = ~std::uint64_t{0};
        std::vector<Face> members;
        for (int i : clique) {
            Face f = faces[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            common &= f.mask();
            members.push_back(f);
        }
        bool star = false;
        if (common) {
            // A max family through a common vertex v must be all of star(v).
            int v = std::countr_zero(common) + 1;
            star = star_count[static_cast<std::size_t>(v)] == static_cast<long long>(clique.size());
        }
        if (!star) {
            out.strict = false;
            out.nonstar_witness = FaceFamily(r, std::move(members));
            return false;
        }
        return true;
    });
    return out;
}

struct ChvatalVerdict {
    bool holds = false;
    long long max_family = 0;
    long long star = 0;
    int best_star_vertex = 0;
    std::vector<Face> witness;
};

/// Chvátal-style mixed-cardinality check: the maximum pairwise-intersecting
/// family of nonempty faces against the best vertex star (all faces through
/// one vertex).
inline ChvatalVerdict chvatal_check(const SimplicialComplex& cx, const SearchBudget& budget = {}) {
    std::vector<Face> faces;
    for (Face f : cx.faces())
        if (!f.empty()) faces.push_back(f);
    if (static_cast<long long>(faces.size()) > budget.max_mixed_faces)
        throw resource_error("too many faces for the mixed-cardinality search");

    ChvatalVerdict out;
    std::vector<long long> count(static_cast<std::size_t>(cx.vertex_count()) + 1, 0);
    for (Face f : faces)
        for (int v : f.vertices()) ++count[static_cast<std::size_t>(v)];
    out.star = -1;
    for (int v = 1; v <= cx.vertex_count(); ++v)
        if (count[static_cast<std::size_t>(v)] > out.star) { out.star = count[static_cast<std::size_t>(v)]; out.best_star_vertex = v; }

    std::vector<int> star_members;
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i].contains(out.best_star_vertex)) star_members.push_back(static_cast<int>(i));

    std::vector<int> perm;
    detail::BitGraph g = detail::compat_graph(faces, 1, perm);
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    std::vector<int> seed;
    for (int m : star_members) seed.push_back(inv[static_cast<std::size_t>(m)]);

    detail::CliqueSearch search(g, budget.max_bb_nodes);
    search.maximize(out.star, seed);
    out.max_family = search.best_size;
    for (int i : search.best_clique)
        out.witness.push_back(faces[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
    std::sort(out.witness.begin(), out.witness.end(), card_lex_less);
    out.holds = out.max_family <= out.star;
    return out;
}

/// Closed-form counts for the coned-boundary family: the best vertex star
/// against the family of all r-faces containing a boundary facet.  For a
/// boundary vertex v the star splits over the n enclosing facets, each a
/// simplex with n+k-1 further vertices, and for r >= n these contributions
/// are disjoint, giving star = n*C(n+k-1, r-1); the family picks one of the
/// n+1 boundary facets plus r-n of its k cone points.  Small instances are
/// verified against direct enumeration.
struct ConedCounts {
    long long star = 0;
    long long family = 0;
    std::optional<long long> star_direct;
    std::optional<long long> family_direct;
    bool verified = false;
};

inline ConedCounts coned_boundary_counts(int n, int k, int r) {
    if (n < 2 || k <= n) throw domain_error("coned boundary counts need k > n >= 2");
    if (r < n || 2 * r > n + k) throw domain_error("need n <= r <= (n+k)/2");

    ConedCounts out;
    out.star = static_cast<long long>(n) * binom(n + k - 1, r - 1);
    out.family = static_cast<long long>(n + 1) * binom(k, r - n);
    if (out.star <= out.family) throw domain_error("closed forms violate star > family");

    if ((n + 1) * (k + 1) <= 24) {
        SimplicialComplex cx = coned_boundary(n, k);
        out.star_direct = star_bound(cx, r).first;
        long long fam = 0;
        std::uint64_t bmask = (std::uint64_t{1} << (n + 1)) - 1;
        for (Face f : cx.faces_of_card(r)) {
            std::uint64_t boundary_part = f.mask() & bmask;
            if (std::popcount(boundary_part) == n) ++fam; // contains some boundary facet
        }
        out.family_direct = fam;
        out.verified = out.star == *out.star_direct && out.family == *out.family_direct;
    }
    return out;
}

} // namespace ekr
