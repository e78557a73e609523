#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "ekr/face.hpp"

namespace ekr {

/// f-vector indexed by face CARDINALITY: counts[r] = number of faces with
/// exactly r vertices, so counts[0] = 1 for every non-void complex (the empty
/// face) and counts[1] = number of covered vertices.  Beware: much of the
/// literature indexes f-vectors by dimension instead, which shifts every
/// index down by one.
using FVector = std::vector<long long>;

/// A family of faces of one common cardinality r.
struct FaceFamily {
    int r = 0;
    std::vector<Face> members;

    FaceFamily() = default;
    FaceFamily(int r_, std::vector<Face> m) : r(r_), members(std::move(m)) {
        for (Face f : members)
            if (f.card() != r) throw domain_error("face family is not uniform in cardinality");
        std::sort(members.begin(), members.end(), seq_lex_less);
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }

    std::size_t size() const { return members.size(); }
    friend bool operator==(const FaceFamily&, const FaceFamily&) = default;
};

/// An immutable simplicial complex: a vertex count n and an antichain of
/// facets.  Two degenerate values are distinguished: the VOID complex (no
/// faces at all, empty facet list) and the EMPTY complex (exactly one face,
/// the empty one).  Vertices outside every facet are permitted; they arise
/// as links, Alexander duals and skeletons keep the ambient universe.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Complex generated by the candidate faces: dominated candidates are
    /// dropped, n defaults to the largest vertex present.
    static SimplicialComplex from_facets(std::vector<Face> candidates, std::optional<int> n = std::nullopt) {
        int maxv = 0;
        for (Face f : candidates) maxv = std::max(maxv, f.max_vertex());
        int nn = n.value_or(maxv);
        if (nn < maxv) throw input_error("vertex count smaller than largest vertex used");
        if (nn > Face::max_vertices) throw input_error("vertex count exceeds 64");

        std::sort(candidates.begin(), candidates.end(), card_lex_less);
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        std::vector<Face> kept;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = i + 1; j < candidates.size() && !dominated; ++j)
                dominated = candidates[i] != candidates[j] && candidates[i].subset_of(candidates[j]);
            if (!dominated) kept.push_back(candidates[i]);
        }
        std::sort(kept.begin(), kept.end(), seq_lex_less);
        return SimplicialComplex(nn, std::move(kept));
    }

    static SimplicialComplex void_complex(int n = 0) { return SimplicialComplex(n, {}); }
    static SimplicialComplex empty_complex(int n = 0) { return SimplicialComplex(n, {Face()}); }

    /// Full simplex on n vertices.
    static SimplicialComplex simplex(int n) {
        std::uint64_t m = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        return SimplicialComplex(n, {Face::from_mask(m)});
    }

    int vertex_count() const { return n_; }
    std::span<const Face> facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    /// True for the EMPTY complex {∅} (only the empty face).
    bool is_empty() const { return facets_.size() == 1 && facets_[0].empty(); }

    /// Dimension: -1 for EMPTY, -2 for VOID.
    int dim() const {
        if (is_void()) return -2;
        int d = -1;
        for (Face f : facets_) d = std::max(d, f.dim());
        return d;
    }

    bool has_face(Face f) const {
        for (Face g : facets_)
            if (f.subset_of(g)) return true;
        return false;
    }

    /// All faces, sorted by (cardinality, lex).  Guarded against blowup.
    std::vector<Face> faces() const {
        enumeration_guard();
        std::unordered_set<std::uint64_t> seen;
        for (Face f : facets_) {
            std::uint64_t m = f.mask();
            std::uint64_t s = m;
            while (true) {
                seen.insert(s);
                if (s == 0) break;
                s = (s - 1) & m;
            }
        }
        std::vector<Face> out;
        out.reserve(seen.size());
        for (std::uint64_t m : seen) out.push_back(Face::from_mask(m));
        std::sort(out.begin(), out.end(), card_lex_less);
        return out;
    }

    std::vector<Face> faces_of_card(int r) const {
        std::vector<Face> out;
        for (Face f : faces())
            if (f.card() == r) out.push_back(f);
        return out;
    }

    FVector f_vector() const {
        if (is_void()) return {};
        FVector counts(static_cast<std::size_t>(dim()) + 2, 0);
        for (Face f : faces()) ++counts[static_cast<std::size_t>(f.card())];
        return counts;
    }

    long long face_count() const {
        long long total = 0;
        for (long long c : f_vector()) total += c;
        return total;
    }

    /// Vertices covered by at least one facet.
    Face covered_vertices() const {
        std::uint64_t m = 0;
        for (Face f : facets_) m |= f.mask();
        return Face::from_mask(m);
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(int n, std::vector<Face> facets) : n_(n), facets_(std::move(facets)) {}

    void enumeration_guard() const {
        double cost = 0;
        for (Face f : facets_) cost += static_cast<double>(std::uint64_t{1} << f.card());
        if (cost > double{1 << 22})
            throw resource_error("face enumeration too large (vertex count " + std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<Face> facets_;
};

/// link_Δ(σ) = {τ : τ∪σ ∈ Δ, τ∩σ = ∅}, kept on the same vertex universe.
/// The link of a facet is the EMPTY complex.
inline SimplicialComplex link(const SimplicialComplex& cx, Face sigma) {
    if (!cx.has_face(sigma)) throw domain_error("link of a non-face");
    std::vector<Face> gen;
    for (Face f : cx.facets())
        if (sigma.subset_of(f)) gen.push_back(f.minus(sigma));
    return SimplicialComplex::from_facets(std::move(gen), cx.vertex_count());
}

/// Join: faces are unions of a face of the first complex with a face of the
/// second; the second complex's vertices are relabeled to n1+1..n1+n2.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_count() + b.vertex_count() > Face::max_vertices)
        throw resource_error("join exceeds 64 vertices");
    std::vector<Face> gen;
    for (Face fa : a.facets())
        for (Face fb : b.facets())
            gen.push_back(fa.unite(Face::from_mask(fb.mask() << a.vertex_count())));
    return SimplicialComplex::from_facets(std::move(gen), a.vertex_count() + b.vertex_count());
}

/// Faces of dimension at most r; r = -1 yields the EMPTY complex.
inline SimplicialComplex skeleton(const SimplicialComplex& cx, int r) {
    if (r < -1) throw domain_error("skeleton dimension must be >= -1");
    if (cx.is_void()) return SimplicialComplex::void_complex(cx.vertex_count());
    if (r == -1) return SimplicialComplex::empty_complex(cx.vertex_count());
    std::vector<Face> gen;
    for (Face f : cx.facets()) {
        if (f.card() <= r + 1) {
            gen.push_back(f);
        } else {
            auto vs = f.vertices();
            for (CombinationIter it(static_cast<int>(vs.size()), r + 1); !it.done(); it.advance()) {
                Face pick = it.current();
                std::uint64_t m = 0;
                for (int i : pick.vertices()) m |= std::uint64_t{1} << (vs[static_cast<std::size_t>(i - 1)] - 1);
                gen.push_back(Face::from_mask(m));
            }
        }
    }
    return SimplicialComplex::from_facets(std::move(gen), cx.vertex_count());
}

/// Subcomplex generated by the faces of dimension exactly r.
inline SimplicialComplex pure_skeleton(const SimplicialComplex& cx, int r) {
    if (r < -1) throw domain_error("pure skeleton dimension must be >= -1");
    if (r > cx.dim()) throw domain_error("pure skeleton dimension exceeds dim");
    if (r == -1) return SimplicialComplex::empty_complex(cx.vertex_count());
    std::vector<Face> gen;
    for (Face f : skeleton(cx, r).facets())
        if (f.card() == r + 1) gen.push_back(f);
    return SimplicialComplex::from_facets(std::move(gen), cx.vertex_count());
}

inline int min_facet_card(const SimplicialComplex& cx) {
    if (cx.is_void()) throw domain_error("void complex has no facets");
    int m = Face::max_vertices + 1;
    for (Face f : cx.facets()) m = std::min(m, f.card());
    return m;
}

inline int max_facet_card(const SimplicialComplex& cx) {
    if (cx.is_void()) throw domain_error("void complex has no facets");
    int m = 0;
    for (Face f : cx.facets()) m = std::max(m, f.card());
    return m;
}

inline bool is_pure(const SimplicialComplex& cx) {
    return min_facet_card(cx) == max_facet_card(cx);
}

/// Shifted: replacing any vertex of any face by a smaller-indexed vertex
/// yields a face.  Checking facets suffices: a replacement inside a face is
/// contained in the corresponding replacement inside an enclosing facet.
inline bool is_shifted(const SimplicialComplex& cx) {
    for (Face f : cx.facets())
        for (int i : f.vertices())
            for (int j = 1; j < i; ++j)
                if (!f.contains(j) && !cx.has_face(f.without(i).with(j))) return false;
    return true;
}

/// All vertices v such that replacing any vertex of any face by v yields a
/// face.  Empty result means the complex is not a near-cone; every cone
/// vertex is always included.
inline std::vector<int> near_cone_apexes(const SimplicialComplex& cx) {
    if (cx.is_void()) throw domain_error("near-cone test on the void complex");
    std::vector<int> apexes;
    for (int v = 1; v <= cx.vertex_count(); ++v) {
        bool ok = true;
        for (Face f : cx.facets()) {
            for (int w : f.vertices()) {
                if (w == v) continue;
                if (!cx.has_face(f.without(w).with(v))) { ok = false; break; }
            }
            if (!ok) break;
        }
        if (ok) apexes.push_back(v);
    }
    return apexes;
}

/// Minimal non-faces: sets outside the complex all of whose proper subsets
/// are faces.  For the VOID complex the empty set itself qualifies.
inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& cx) {
    if (cx.is_void()) return {Face()};
    std::unordered_set<std::uint64_t> out;
    for (Face f : cx.faces()) {
        for (int v = 1; v <= cx.vertex_count(); ++v) {
            if (f.contains(v)) continue;
            Face cand = f.with(v);
            if (cx.has_face(cand)) continue;
            bool minimal = true;
            for (int u : cand.vertices())
                if (!cx.has_face(cand.without(u))) { minimal = false; break; }
            if (minimal) out.insert(cand.mask());
        }
    }
    std::vector<Face> res;
    res.reserve(out.size());
    for (std::uint64_t m : out) res.push_back(Face::from_mask(m));
    std::sort(res.begin(), res.end(), card_lex_less);
    return res;
}

/// Flag complex: every minimal non-face is an edge.  Exactly the
/// independence complexes of graphs (on a covered vertex set).
inline bool is_flag(const SimplicialComplex& cx) {
    for (Face f : minimal_nonfaces(cx))
        if (f.card() != 2) return false;
    return true;
}

/// Alexander dual: facets are the complements of the minimal non-faces.
/// The full simplex maps to VOID and vice versa; the dual is an involution.
inline SimplicialComplex alexander_dual(const SimplicialComplex& cx) {
    int n = cx.vertex_count();
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<Face> gen;
    for (Face f : minimal_nonfaces(cx)) gen.push_back(Face::from_mask(full & ~f.mask()));
    return SimplicialComplex::from_facets(std::move(gen), n);
}

/// Relabel faces through a 1-based map (old vertex -> new vertex).
inline Face relabel(Face f, std::span<const int> map) {
    std::uint64_t m = 0;
    for (int v : f.vertices()) m |= std::uint64_t{1} << (map[static_cast<std::size_t>(v - 1)] - 1);
    return Face::from_mask(m);
}

inline SimplicialComplex relabel(const SimplicialComplex& cx, std::span<const int> map, int new_n) {
    std::vector<Face> gen;
    for (Face f : cx.facets()) gen.push_back(relabel(f, map));
    return SimplicialComplex::from_facets(std::move(gen), new_n);
}

/// Drop uncovered vertices and relabel the rest order-preservingly onto
/// 1..n'.  Restores the every-vertex-covered convention for values (links,
/// duals) that may violate it.
inline SimplicialComplex normalized(const SimplicialComplex& cx) {
    Face cov = cx.covered_vertices();
    std::vector<int> map(static_cast<std::size_t>(cx.vertex_count()), 0);
    int next = 0;
    for (int v = 1; v <= cx.vertex_count(); ++v)
        if (cov.contains(v)) map[static_cast<std::size_t>(v - 1)] = ++next;
    if (cx.is_void()) return SimplicialComplex::void_complex(0);
    return relabel(cx, map, next);
}

} // namespace ekr
