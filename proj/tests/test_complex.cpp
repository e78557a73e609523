#include <catch2/catch_amalgamated.hpp>

#include "ekr/complex.hpp"
#include "ekr/gf.hpp"

using namespace ekr;

namespace {

// Test-only oracle: the shiftedness definition checked over the full face
// set, not just the facets.
bool shifted_by_all_faces(const SimplicialComplex& cx) {
    for (Face f : cx.faces())
        for (int i : f.vertices())
            for (int j = 1; j < i; ++j)
                if (!f.contains(j) && !cx.has_face(f.without(i).with(j))) return false;
    return true;
}

// Test-only oracle: the near-cone condition checked over all faces.
std::vector<int> apexes_by_all_faces(const SimplicialComplex& cx) {
    std::vector<int> out;
    for (int v = 1; v <= cx.vertex_count(); ++v) {
        bool ok = true;
        for (Face f : cx.faces()) {
            for (int w : f.vertices()) {
                if (w == v) continue;
                if (!cx.has_face(f.without(w).with(v))) { ok = false; break; }
            }
            if (!ok) break;
        }
        if (ok) out.push_back(v);
    }
    return out;
}

// Test-only oracle: minimal non-faces by scanning every subset of [n].
std::vector<Face> minimal_nonfaces_bruteforce(const SimplicialComplex& cx) {
    int n = cx.vertex_count();
    std::vector<Face> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        Face f = Face::from_mask(m);
        if (cx.has_face(f)) continue;
        bool minimal = true;
        for (int v : f.vertices())
            if (!cx.has_face(f.without(v))) { minimal = false; break; }
        if (minimal) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), card_lex_less);
    return out;
}

SimplicialComplex random_complex(int n, SplitMix64& rng) {
    std::vector<Face> facets;
    int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n + 1)));
    for (int i = 0; i < count; ++i) {
        std::uint64_t m = rng.below(std::uint64_t{1} << n);
        if (m) facets.push_back(Face::from_mask(m));
    }
    if (facets.empty()) facets.push_back(Face::singleton(1));
    return SimplicialComplex::from_facets(std::move(facets), n);
}

} // namespace

TEST_CASE("face basics") {
    Face f = Face::of({3, 1, 5});
    CHECK(f.card() == 3);
    CHECK(f.dim() == 2);
    CHECK(f.vertices() == std::vector<int>{1, 3, 5});
    CHECK(f.to_string() == "1 3 5");
    CHECK(Face().to_string() == "0");
    CHECK(f.contains(3));
    CHECK(!f.contains(2));
    CHECK(Face::of({1, 3}).subset_of(f));
    CHECK_THROWS_AS(Face::of({0}), input_error);
    CHECK_THROWS_AS(Face::of({-2}), input_error);
}

TEST_CASE("face lex order") {
    CHECK(seq_lex_less(Face::of({1, 2}), Face::of({1, 3})));
    CHECK(seq_lex_less(Face::of({1, 3}), Face::of({1, 4})));
    CHECK(seq_lex_less(Face::of({1, 4}), Face::of({2, 3})));
    CHECK(seq_lex_less(Face::of({1}), Face::of({1, 2})));
    CHECK(!seq_lex_less(Face::of({2}), Face::of({1, 3})));

    // CombinationIter emits r-subsets in exactly this order.
    CombinationIter it(4, 2);
    std::vector<Face> got;
    for (; !it.done(); it.advance()) got.push_back(it.current());
    REQUIRE(got.size() == 6);
    CHECK(got.front() == Face::of({1, 2}));
    CHECK(got[1] == Face::of({1, 3}));
    CHECK(got.back() == Face::of({3, 4}));
    CHECK(std::is_sorted(got.begin(), got.end(), seq_lex_less));
}

TEST_CASE("from_facets") {
    auto cx = SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({3, 4})});
    CHECK(cx.vertex_count() == 4);
    CHECK(cx.f_vector() == FVector{1, 4, 2});

    auto reduced = SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({1})});
    CHECK(reduced.facets().size() == 1);
    CHECK(reduced.facets()[0] == Face::of({1, 2}));

    auto void_cx = SimplicialComplex::from_facets({});
    CHECK(void_cx.is_void());
    CHECK(void_cx.f_vector().empty());
    CHECK(void_cx.dim() == -2);

    auto empty_cx = SimplicialComplex::from_facets({Face()});
    CHECK(empty_cx.is_empty());
    CHECK(empty_cx.dim() == -1);
    CHECK(empty_cx.f_vector() == FVector{1});

    CHECK_THROWS_AS(SimplicialComplex::from_facets({Face::of({5})}, 3), input_error);
}

TEST_CASE("f-vector of simplex") {
    auto cx = SimplicialComplex::simplex(3);
    CHECK(cx.f_vector() == FVector{1, 3, 3, 1});
    CHECK(cx.face_count() == 8);
}

TEST_CASE("link") {
    auto cx = SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({1, 3}), Face::of({4})});
    CHECK(link(cx, Face()) == cx);
    auto lk = link(cx, Face::singleton(1));
    CHECK(lk.vertex_count() == 4);
    std::vector<Face> expect{Face::of({2}), Face::of({3})};
    CHECK(std::vector<Face>(lk.facets().begin(), lk.facets().end()) == expect);

    for (Face facet : cx.facets()) CHECK(link(cx, facet).is_empty());
    CHECK_THROWS_AS(link(cx, Face::of({2, 3})), domain_error);
}

TEST_CASE("join") {
    auto point = SimplicialComplex::simplex(1);
    auto edge = join(point, point);
    CHECK(edge.f_vector() == FVector{1, 2, 1});

    auto cx = SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({3})});
    CHECK(join(cx, SimplicialComplex::empty_complex()) == cx);
    CHECK(join(SimplicialComplex::empty_complex(), cx) == cx);
    CHECK(join(cx, SimplicialComplex::void_complex()).is_void());
}

TEST_CASE("skeleton") {
    auto s4 = SimplicialComplex::simplex(4);
    auto sk1 = skeleton(s4, 1);
    CHECK(sk1.f_vector() == FVector{1, 4, 6});
    CHECK(skeleton(s4, s4.dim()) == s4);
    CHECK(skeleton(s4, -1).is_empty());

    auto cx = SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({3})});
    CHECK(pure_skeleton(cx, 0).facets().size() == 3);
    CHECK(pure_skeleton(cx, cx.dim()).facets().size() == 1);
    CHECK_THROWS_AS(pure_skeleton(cx, 2), domain_error);

    auto pure = SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({2, 3})});
    CHECK(pure_skeleton(pure, pure.dim()) == pure);
}

TEST_CASE("shiftedness") {
    CHECK(is_shifted(SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({1, 3}), Face::of({4})})));
    CHECK(!is_shifted(SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({2, 3}), Face::of({4})})));
    CHECK(is_shifted(SimplicialComplex::simplex(5)));

    // The paper-style variant with facets {1,2},{2,3},{4} is NOT shifted:
    // face {2,3} forces {1,3}.
    auto variant = SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({2, 3}), Face::of({4})});
    CHECK(!shifted_by_all_faces(variant));

    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        auto cx = random_complex(5, rng);
        CHECK(is_shifted(cx) == shifted_by_all_faces(cx));
    }
}

TEST_CASE("skeleton of shifted complex is shifted") {
    SplitMix64 rng(11);
    int checked = 0;
    for (int i = 0; i < 300 && checked < 50; ++i) {
        auto cx = random_complex(5, rng);
        if (!is_shifted(cx)) continue;
        ++checked;
        for (int r = 0; r <= cx.dim(); ++r) CHECK(is_shifted(skeleton(cx, r)));
    }
    CHECK(checked > 0);
}

TEST_CASE("near-cone apexes") {
    auto base = SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({3})});
    auto cone = join(SimplicialComplex::simplex(1), base);
    auto apexes = near_cone_apexes(cone);
    CHECK(std::find(apexes.begin(), apexes.end(), 1) != apexes.end());

    auto shifted = SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({1, 3}), Face::of({4})});
    auto sa = near_cone_apexes(shifted);
    REQUIRE(!sa.empty());
    CHECK(sa.front() == 1);

    CHECK(near_cone_apexes(SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({3, 4})})).empty());

    SplitMix64 rng(13);
    for (int i = 0; i < 150; ++i) {
        auto cx = random_complex(5, rng);
        CHECK(near_cone_apexes(cx) == apexes_by_all_faces(cx));
    }
}

TEST_CASE("near-cone apex maximizes link sizes") {
    SplitMix64 rng(17);
    int found = 0;
    for (int i = 0; i < 400 && found < 60; ++i) {
        auto cx = random_complex(5, rng);
        auto apexes = near_cone_apexes(cx);
        if (apexes.empty()) continue;
        ++found;
        int v = apexes.front();
        FVector fv = link(cx, Face::singleton(v)).f_vector();
        for (int w = 1; w <= cx.vertex_count(); ++w) {
            if (!cx.has_face(Face::singleton(w))) continue;
            FVector fw = link(cx, Face::singleton(w)).f_vector();
            for (std::size_t r = 0; r < fw.size(); ++r) {
                long long at_v = r < fv.size() ? fv[r] : 0;
                CHECK(fw[r] <= at_v);
            }
        }
    }
    CHECK(found > 0);
}

TEST_CASE("alexander dual") {
    auto cx = SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({3, 4})});
    auto dual = alexander_dual(cx);
    auto expect = SimplicialComplex::from_facets(
        {Face::of({2, 4}), Face::of({2, 3}), Face::of({1, 4}), Face::of({1, 3})}, 4);
    CHECK(dual == expect);

    CHECK(alexander_dual(SimplicialComplex::simplex(3)).is_void());

    SplitMix64 rng(19);
    for (int i = 0; i < 150; ++i) {
        auto r = random_complex(5, rng);
        CHECK(minimal_nonfaces(r) == minimal_nonfaces_bruteforce(r));
        CHECK(alexander_dual(alexander_dual(r)) == r);
    }
}

TEST_CASE("facet cardinalities and purity") {
    auto cx = SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({3})});
    CHECK(min_facet_card(cx) == 1);
    CHECK(max_facet_card(cx) == 2);
    CHECK(!is_pure(cx));
    auto s = SimplicialComplex::simplex(4);
    CHECK(min_facet_card(s) == 4);
    CHECK(is_pure(s));
    CHECK_THROWS_AS(min_facet_card(SimplicialComplex::void_complex()), domain_error);
}

TEST_CASE("downward closure and antichain invariants") {
    SplitMix64 rng(23);
    for (int i = 0; i < 100; ++i) {
        auto cx = random_complex(5, rng);
        auto all = cx.faces();
        for (Face f : all)
            for (int v : f.vertices()) CHECK(cx.has_face(f.without(v)));
        for (Face a : cx.facets())
            for (Face b : cx.facets())
                if (a != b) CHECK(!a.subset_of(b));
    }
}

TEST_CASE("normalization drops uncovered vertices") {
    auto lk = SimplicialComplex::from_facets({Face::of({2, 4})}, 5);
    auto norm = normalized(lk);
    CHECK(norm.vertex_count() == 2);
    CHECK(norm.facets()[0] == Face::of({1, 2}));

    CHECK(normalized(SimplicialComplex::void_complex(3)).is_void());
    auto e = normalized(SimplicialComplex::empty_complex(4));
    CHECK(e.is_empty());
    CHECK(e.vertex_count() == 0);
}

TEST_CASE("link against independence-complex identity is consistent with joins") {
    // link of a union face in a join decomposes as the join of links.
    SplitMix64 rng(29);
    for (int i = 0; i < 40; ++i) {
        auto a = random_complex(4, rng);
        auto b = random_complex(3, rng);
        auto j = join(a, b);
        for (Face fa : a.faces()) {
            for (Face fb : b.faces()) {
                Face sigma = fa.unite(Face::from_mask(fb.mask() << a.vertex_count()));
                auto lhs = link(j, sigma);
                auto rhs = join(link(a, fa), link(b, fb));
                CHECK(lhs == rhs);
            }
        }
    }
}
