#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "ekr/complex.hpp"
#include "ekr/gf.hpp"

namespace ekr {

struct ShiftConfig {
    std::uint64_t prime = 2147483647ULL;
    std::uint64_t seed = 0;
    int max_retries = 5;
    /// Recompute with a second independent seed and require agreement.
    bool cross_check_seeds = true;
    int max_vertices = 20;
};

struct ShiftResult {
    SimplicialComplex shifted;
    int retries_used = 0;
    std::vector<std::uint64_t> seeds_used;
};

namespace detail {

/// One shifting attempt with a fixed random matrix.  For each cardinality r
/// the columns of the compound-minor matrix (rows: r-faces of the complex,
/// columns: all r-subsets of [n] in lex order, entries: minors of g) are
/// scanned greedily; the selected column sets assemble the shifted complex.
/// Returns nothing when any structural post-check fails, i.e. the matrix was
/// not generic enough.
inline std::optional<SimplicialComplex> shift_attempt(const SimplicialComplex& cx,
                                                      const PrimeField& field,
                                                      std::uint64_t seed) {
    const int n = cx.vertex_count();
    GfMatrix g = random_matrix(field, n, n, seed);

    std::map<int, std::vector<Face>> by_card;
    for (Face f : cx.faces())
        if (!f.empty()) by_card[f.card()].push_back(f);

    std::unordered_set<std::uint64_t> selected;
    selected.insert(0); // the empty face
    std::vector<Face> all_selected;

    for (auto& [r, rows] : by_card) {
        GreedyColumnBasis basis(field, static_cast<int>(rows.size()));
        std::vector<Face> picked;
        for (CombinationIter it(n, r); !it.done(); it.advance()) {
            Face s = it.current();
            std::vector<std::uint64_t> col(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                col[i] = minor_det(g, rows[i], s);
            if (basis.offer(std::move(col))) picked.push_back(s);
            if (picked.size() == rows.size()) break;
        }
        if (picked.size() != rows.size()) return std::nullopt; // rank deficit
        for (Face s : picked) {
            selected.insert(s.mask());
            all_selected.push_back(s);
        }
    }

    // Downward closure of the union across cardinalities.
    for (Face s : all_selected)
        for (int v : s.vertices())
            if (!selected.contains(s.without(v).mask())) return std::nullopt;

    SimplicialComplex out = SimplicialComplex::from_facets(all_selected.empty()
                                                               ? std::vector<Face>{Face()}
                                                               : all_selected,
                                                           n);
    if (!is_shifted(out)) return std::nullopt;
    if (out.f_vector() != cx.f_vector()) return std::nullopt;
    return out;
}

} // namespace detail

/// Exterior algebraic shift over GF(p): a shifted complex with the same
/// f-vector.  Structural failures of the random matrix are detected and
/// retried with fresh seeds.
inline ShiftResult exterior_shift(const SimplicialComplex& cx, const ShiftConfig& cfg = {}) {
    if (cx.is_void()) throw domain_error("shift of the void complex");
    if (cx.vertex_count() > cfg.max_vertices)
        throw resource_error("shift guard: " + std::to_string(cx.vertex_count()) + " vertices");
    PrimeField field(cfg.prime);

    ShiftResult res;
    std::uint64_t seed = cfg.seed;
    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
        res.seeds_used.push_back(seed);
        auto first = detail::shift_attempt(cx, field, seed);
        if (first) {
            bool ok = true;
            if (cfg.cross_check_seeds) {
                auto second = detail::shift_attempt(cx, field, mix64(seed ^ 0xc2b2ae3d27d4eb4fULL));
                ok = second && *second == *first;
            }
            if (ok) {
                res.shifted = std::move(*first);
                res.retries_used = attempt;
                return res;
            }
        }
        seed = mix64(seed ^ 0x9e3779b97f4a7c15ULL);
    }
    throw genericity_error("shifting failed structural checks after " +
                           std::to_string(cfg.max_retries + 1) + " attempts (p=" +
                           std::to_string(cfg.prime) + ")");
}

/// Shift of a uniform family: the cardinality-r faces of the shift of the
/// complex it generates.  Preserves the family size.
inline FaceFamily shift_family(const FaceFamily& fam, int n, const ShiftConfig& cfg = {}) {
    SimplicialComplex cx = SimplicialComplex::from_facets(fam.members, n);
    SimplicialComplex sh = exterior_shift(cx, cfg).shifted;
    return FaceFamily(fam.r, sh.faces_of_card(fam.r));
}

/// Outcome of the near-cone shift decomposition check.
struct NevoReport {
    bool link_match = false;     // link of v1 in the shift equals the shift of the link
    bool remainder_ok = false;   // everything outside the cone is a facet avoiding v1
    bool link_fvector_match = false;
    std::optional<Face> offender;

    bool ok() const { return link_match && remainder_ok && link_fvector_match; }
};

/// Checks, for a near-cone with the given apex, that the shift decomposes as
/// the cone over the shifted link (on vertices v2..vn) plus facets avoiding
/// v1.
inline NevoReport check_nevo(const SimplicialComplex& cx, int apex, const ShiftConfig& cfg = {}) {
    {
        auto apexes = near_cone_apexes(cx);
        bool found = false;
        for (int a : apexes) found = found || a == apex;
        if (!found) throw domain_error("vertex is not a near-cone apex");
    }
    const int n = cx.vertex_count();
    SimplicialComplex whole = exterior_shift(cx, cfg).shifted;

    SimplicialComplex lk = link(cx, Face::singleton(apex));
    std::vector<int> down(static_cast<std::size_t>(n), 0);
    for (int v = 1; v <= n; ++v)
        if (v != apex) down[static_cast<std::size_t>(v - 1)] = v < apex ? v : v - 1;
    SimplicialComplex lk_small = relabel(lk, down, n - 1);
    SimplicialComplex lk_shift = exterior_shift(lk_small, cfg).shifted;

    std::vector<int> up(static_cast<std::size_t>(n - 1), 0);
    for (int v = 1; v <= n - 1; ++v) up[static_cast<std::size_t>(v - 1)] = v + 1;
    SimplicialComplex cone_link = relabel(lk_shift, up, n);

    NevoReport rep;
    rep.link_match = link(whole, Face::singleton(1)) == cone_link;
    rep.link_fvector_match = lk.f_vector() == link(whole, Face::singleton(1)).f_vector();

    rep.remainder_ok = true;
    for (Face f : whole.faces()) {
        bool in_cone = cone_link.has_face(f.without(1));
        if (in_cone) continue;
        bool is_facet = false;
        for (Face g : whole.facets()) is_facet = is_facet || g == f;
        if (!is_facet || f.contains(1)) {
            rep.remainder_ok = false;
            rep.offender = f;
            break;
        }
    }
    return rep;
}

} // namespace ekr
