#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ekr/complex.hpp"
#include "ekr/gf.hpp"
#include "ekr/shift.hpp"

namespace ekr {

/// Reduced Betti numbers over GF(p): dims[i] = dim H~_{i-1}, covering
/// degrees -1 through dim.  The VOID complex yields an empty vector; the
/// EMPTY complex has exactly one 1, in degree -1.
struct BettiVector {
    std::uint64_t prime = 0;
    std::vector<long long> dims;

    long long in_degree(int deg) const {
        std::size_t i = static_cast<std::size_t>(deg + 1);
        return i < dims.size() ? dims[i] : 0;
    }

    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Matrix of the boundary map from cardinality-c chains to cardinality-(c-1)
/// chains of the augmented chain complex, with the usual alternating signs;
/// c = 1 is the augmentation (every vertex maps to the empty-face generator).
inline GfMatrix boundary_matrix(const SimplicialComplex& cx, int c, const PrimeField& field) {
    if (c < 0 || c > cx.dim() + 1) throw domain_error("boundary cardinality out of range");
    std::vector<Face> rows = cx.faces_of_card(c - 1);
    std::vector<Face> cols = cx.faces_of_card(c);
    std::unordered_map<std::uint64_t, int> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i].mask()] = static_cast<int>(i);

    GfMatrix m(field, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    std::uint64_t one = 1 % field.modulus();
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto vs = cols[j].vertices();
        for (std::size_t pos = 0; pos < vs.size(); ++pos) {
            int i = row_of.at(cols[j].without(vs[pos]).mask());
            m.at(i, static_cast<int>(j)) = (pos % 2 == 0) ? one : field.neg(one);
        }
    }
    return m;
}

/// dim H~_{c-1} = f_c - rank ∂_c - rank ∂_{c+1}, ranks over GF(p).
inline BettiVector reduced_betti(const SimplicialComplex& cx, std::uint64_t p) {
    PrimeField field(p);
    BettiVector b;
    b.prime = p;
    if (cx.is_void()) return b;

    const int d = cx.dim();
    FVector f = cx.f_vector();
    std::vector<int> ranks(static_cast<std::size_t>(d) + 3, 0); // ranks[c] = rank ∂_c
    for (int c = 1; c <= d + 1; ++c) ranks[static_cast<std::size_t>(c)] = gf_rank(boundary_matrix(cx, c, field));

    b.dims.resize(static_cast<std::size_t>(d) + 2);
    for (int deg = -1; deg <= d; ++deg) {
        int c = deg + 1;
        b.dims[static_cast<std::size_t>(c)] =
            f[static_cast<std::size_t>(c)] - ranks[static_cast<std::size_t>(c)] - ranks[static_cast<std::size_t>(c) + 1];
    }
    return b;
}

struct CmReport {
    bool cohen_macaulay = false;
    std::optional<Face> witness_face; // first face whose link has homology below its dimension
    int witness_degree = 0;

    explicit operator bool() const { return cohen_macaulay; }
};

/// Cohen-Macaulay over GF(p): the reduced homology of every face's link
/// vanishes below the link's dimension.  Faces are scanned in canonical
/// (cardinality, lex) order so the witness is deterministic.
inline CmReport is_cohen_macaulay(const SimplicialComplex& cx, std::uint64_t p) {
    if (cx.is_void()) throw domain_error("Cohen-Macaulay test on the void complex");
    for (Face sigma : cx.faces()) {
        SimplicialComplex lk = link(cx, sigma);
        int ld = lk.dim();
        if (ld <= -1) continue;
        BettiVector b = reduced_betti(lk, p);
        for (int i = -1; i < ld; ++i) {
            if (b.in_degree(i) != 0) return {false, sigma, i};
        }
    }
    return {true, std::nullopt, 0};
}

/// Sequentially Cohen-Macaulay: every pure r-skeleton is Cohen-Macaulay.
inline bool is_sequentially_cm(const SimplicialComplex& cx, std::uint64_t p) {
    if (cx.is_void()) throw domain_error("sequential CM test on the void complex");
    for (int r = 0; r <= cx.dim(); ++r)
        if (!is_cohen_macaulay(pure_skeleton(cx, r), p).cohen_macaulay) return false;
    return true;
}

enum class DepthMethod { links, shift };

struct DepthReport {
    int depth = -1;
    DepthMethod method = DepthMethod::links;
    /// Faces attaining the bound, with the offending homology degree
    /// (links method only).
    std::vector<std::pair<Face, int>> constraints;
};

namespace detail {

/// depth = min over faces σ of |σ| + (least degree with nonvanishing
/// reduced homology of link σ); facets contribute their dimension, so the
/// minimum facet dimension is an a-priori upper bound used for pruning.
inline DepthReport depth_by_links(const SimplicialComplex& cx, std::uint64_t p) {
    DepthReport rep;
    rep.method = DepthMethod::links;
    int best = min_facet_card(cx) - 1;
    std::vector<std::pair<Face, int>> at_best;
    for (Face sigma : cx.faces()) {
        if (sigma.card() - 1 > best) continue;
        SimplicialComplex lk = link(cx, sigma);
        BettiVector b = reduced_betti(lk, p);
        for (int i = -1; i <= lk.dim(); ++i) {
            if (b.in_degree(i) == 0) continue;
            int bound = sigma.card() + i;
            if (bound < best) {
                best = bound;
                at_best.clear();
            }
            if (bound == best) at_best.emplace_back(sigma, i);
            break;
        }
    }
    rep.depth = best;
    rep.constraints = std::move(at_best);
    return rep;
}

} // namespace detail

/// Depth over GF(p), by the link-homology characterization or as the
/// minimum facet dimension of the exterior shift.  The two methods agree;
/// the test suites cross-validate them.
inline DepthReport depth(const SimplicialComplex& cx, std::uint64_t p,
                         DepthMethod method = DepthMethod::links,
                         const ShiftConfig& shift_cfg = {}) {
    if (cx.is_void()) throw domain_error("depth of the void complex");
    if (method == DepthMethod::links) return detail::depth_by_links(cx, p);
    ShiftConfig cfg = shift_cfg;
    cfg.prime = p;
    DepthReport rep;
    rep.method = DepthMethod::shift;
    rep.depth = min_facet_card(exterior_shift(cx, cfg).shifted) - 1;
    return rep;
}

/// depth(Δ1 * Δ2) = depth Δ1 + depth Δ2 + 1.
inline bool depth_of_join_check(const SimplicialComplex& a, const SimplicialComplex& b,
                                std::uint64_t p, DepthMethod method = DepthMethod::links,
                                const ShiftConfig& cfg = {}) {
    int da = depth(a, p, method, cfg).depth;
    int db = depth(b, p, method, cfg).depth;
    int dj = depth(join(a, b), p, method, cfg).depth;
    return dj == da + db + 1;
}

} // namespace ekr
