#include <catch2/catch_amalgamated.hpp>

#include "ekr/graph.hpp"
#include "ekr/intersecting.hpp"
#include "ekr/shift.hpp"

using namespace ekr;

namespace {

SimplicialComplex boundary_3simplex() {
    return SimplicialComplex::from_facets(
        {Face::of({1, 2, 3}), Face::of({1, 2, 4}), Face::of({1, 3, 4}), Face::of({2, 3, 4})});
}

bool pairwise_t_intersecting(const std::vector<Face>& fam, int t) {
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j)
            if (fam[i].intersection_card(fam[j]) < t) return false;
    return true;
}

// Test-only oracle: maximum intersecting family by scanning all subsets of
// the face list (only usable for tiny instances).
long long max_intersecting_bruteforce(const std::vector<Face>& faces, int t) {
    long long best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << faces.size()); ++m) {
        std::vector<Face> fam;
        for (std::size_t i = 0; i < faces.size(); ++i)
            if ((m >> i) & 1) fam.push_back(faces[i]);
        if (pairwise_t_intersecting(fam, t)) best = std::max(best, static_cast<long long>(fam.size()));
    }
    return best;
}

} // namespace

TEST_CASE("star bounds") {
    CHECK(star_bound(SimplicialComplex::simplex(8), 4) == std::pair<long long, int>{35, 1});
    CHECK(star_bound(SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({3, 4})}), 2).first == 1);
    CHECK_THROWS_AS(star_bound(SimplicialComplex::simplex(3), 0), domain_error);
    CHECK_THROWS_AS(star_bound(SimplicialComplex::simplex(3), 4), domain_error);

    // near-cone apexes attain the bound
    SplitMix64 rng(103);
    int found = 0;
    for (int i = 0; i < 200 && found < 25; ++i) {
        Graph g = erdos_renyi(5, 0.5, rng.next());
        Graph dg = d_op(g);
        auto cx = independence_complex(dg);
        ++found;
        for (int r = 1; r <= max_facet_card(cx); ++r) {
            auto [bound, v] = star_bound(cx, r);
            long long at_apex = 0;
            for (Face f : cx.faces_of_card(r))
                if (f.contains(dg.vertex_count())) ++at_apex;
            CHECK(at_apex == bound);
        }
    }
    CHECK(found > 0);
}

TEST_CASE("maximum intersecting families") {
    CHECK(max_intersecting(SimplicialComplex::simplex(8), 4).size == 35);
    CHECK(max_intersecting(SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({3, 4})}), 2).size == 1);

    auto b3 = boundary_3simplex();
    MaxFamily mf = max_intersecting(b3, 3);
    CHECK(mf.size == 4);
    CHECK(star_bound(b3, 3).first == 3);
    CHECK(pairwise_t_intersecting(mf.witness.members, 1));

    CHECK_THROWS_AS(max_intersecting(SimplicialComplex::simplex(3), 4), domain_error);
    CHECK_THROWS_AS(max_intersecting(SimplicialComplex::simplex(3), 2, 3), domain_error);

    SearchBudget tight;
    tight.max_faces = 3;
    CHECK_THROWS_AS(max_intersecting(SimplicialComplex::simplex(5), 2, 1, tight), resource_error);

    SECTION("agrees with brute force on tiny instances") {
        SplitMix64 rng(107);
        for (int trial = 0; trial < 40; ++trial) {
            Graph g = erdos_renyi(5, 0.35, rng.next());
            auto cx = independence_complex(g);
            for (int r = 1; r <= std::min(3, max_facet_card(cx)); ++r) {
                auto faces = cx.faces_of_card(r);
                if (faces.size() > 16) continue;
                for (int t = 1; t <= std::min(r, 2); ++t) {
                    MaxFamily got = max_intersecting(cx, r, t);
                    CHECK(got.size == max_intersecting_bruteforce(faces, t));
                    CHECK(pairwise_t_intersecting(got.witness.members, t));
                    CHECK(static_cast<long long>(got.witness.size()) == got.size);
                }
            }
        }
    }

    SECTION("monotone under adding faces") {
        SplitMix64 rng(109);
        for (int trial = 0; trial < 25; ++trial) {
            Graph g = erdos_renyi(5, 0.6, rng.next());
            auto small = independence_complex(g);
            // drop a random edge: the independence complex only grows
            auto edges = g.edges();
            if (edges.empty()) continue;
            auto [du, dv] = edges[rng.below(edges.size())];
            Graph bigger(5);
            for (auto [u, v] : edges)
                if (!(u == du && v == dv)) bigger.add_edge(u, v);
            auto big = independence_complex(bigger);
            for (int r = 1; r <= max_facet_card(small); ++r)
                CHECK(max_intersecting(big, r).size >= max_intersecting(small, r).size);
        }
    }

    SECTION("when any two r-faces of the simplex meet, the max is everything") {
        auto s7 = SimplicialComplex::simplex(7);
        CHECK(max_intersecting(s7, 4).size == binom(7, 4));
    }
}

TEST_CASE("r-EKR verdicts") {
    for (int r = 1; r <= 4; ++r) {
        EkrVerdict v = is_r_ekr(SimplicialComplex::simplex(8), r);
        CHECK(v.is_ekr);
        CHECK(v.max_family_size == binom(7, r - 1));
        CHECK(v.best_star_vertex == 1);
    }

    EkrVerdict bad = is_r_ekr(boundary_3simplex(), 3);
    CHECK(!bad.is_ekr);
    CHECK(bad.max_family_size == 4);
    CHECK(bad.star_bound == 3);
    CHECK(bad.witness.size() == 4);

    for (int n = 4; n <= 8; ++n) {
        auto cx = independence_complex(cycle_graph(n));
        for (int r = 1; r <= max_facet_card(cx); ++r) CHECK(is_r_ekr(cx, r).is_ekr);
    }
}

TEST_CASE("strictness") {
    CHECK(is_strict_r_ekr(SimplicialComplex::simplex(7), 2).strict);
    CHECK(is_strict_r_ekr(SimplicialComplex::simplex(7), 3).strict);

    StrictVerdict sv = is_strict_r_ekr(SimplicialComplex::simplex(4), 2);
    CHECK(!sv.strict);
    CHECK(sv.optimum == 3);
    REQUIRE(sv.nonstar_witness);
    CHECK(sv.nonstar_witness->size() == 3);
    Face common = Face::from_mask(~std::uint64_t{0});
    for (Face f : sv.nonstar_witness->members) common = common.intersect(f);
    CHECK(common.empty());
    CHECK(pairwise_t_intersecting(sv.nonstar_witness->members, 1));

    // r = 1: singleton families are stars.
    CHECK(is_strict_r_ekr(SimplicialComplex::simplex(3), 1).strict);

    SearchBudget tiny;
    tiny.max_nodes = 1;
    CHECK_THROWS_AS(is_strict_r_ekr(SimplicialComplex::simplex(7), 3, tiny), resource_error);
}

TEST_CASE("mixed-cardinality families") {
    for (int n = 2; n <= 5; ++n) {
        ChvatalVerdict v = chvatal_check(SimplicialComplex::simplex(n));
        CHECK(v.holds);
        CHECK(v.star == (1LL << (n - 1)));
        CHECK(v.max_family == v.star);
    }

    ChvatalVerdict two = chvatal_check(SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({3, 4})}));
    CHECK(two.holds);
    CHECK(two.max_family == 2);
    CHECK(two.star == 2);

    SearchBudget tight;
    tight.max_mixed_faces = 3;
    CHECK_THROWS_AS(chvatal_check(SimplicialComplex::simplex(4), tight), resource_error);
}

TEST_CASE("coned boundary counts") {
    struct Row {
        int n, k, r;
        long long star, family;
    };
    // closed forms: star = n*C(n+k-1, r-1), family = (n+1)*C(k, r-n)
    for (Row row : {Row{2, 3, 2, 8, 3}, Row{2, 4, 2, 10, 3}, Row{2, 4, 3, 20, 12}, Row{3, 4, 3, 45, 4}}) {
        ConedCounts c = coned_boundary_counts(row.n, row.k, row.r);
        CHECK(c.star == row.star);
        CHECK(c.family == row.family);
        REQUIRE(c.star_direct);
        REQUIRE(c.family_direct);
        CHECK(c.verified);
        CHECK(*c.star_direct == row.star);
        CHECK(*c.family_direct == row.family);
        CHECK(c.star > c.family);
    }

    CHECK_THROWS_AS(coned_boundary_counts(1, 3, 2), domain_error);
    CHECK_THROWS_AS(coned_boundary_counts(2, 2, 2), domain_error);
    CHECK_THROWS_AS(coned_boundary_counts(2, 3, 1), domain_error);
    CHECK_THROWS_AS(coned_boundary_counts(2, 3, 4), domain_error);
}

TEST_CASE("shift-compression soundness for intersecting families") {
    // |Shift A| = |A| and intersection is preserved, so the compressed
    // maximum never drops below the original.
    SplitMix64 rng(113);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = erdos_renyi(5, 0.4, rng.next());
        auto cx = independence_complex(g);
        int r = 2;
        if (max_facet_card(cx) < r) continue;
        MaxFamily mf = max_intersecting(cx, r);
        FaceFamily shifted = shift_family(mf.witness, cx.vertex_count(), ShiftConfig{});
        CHECK(shifted.size() == mf.witness.size());
        CHECK(pairwise_t_intersecting(shifted.members, 1));
    }
}
