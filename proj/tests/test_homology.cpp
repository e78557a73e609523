#include <catch2/catch_amalgamated.hpp>

#include "ekr/graph.hpp"
#include "ekr/homology.hpp"

using namespace ekr;

namespace {

constexpr std::uint64_t kP = 2147483647ULL;

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

SimplicialComplex hollow_triangle() {
    return SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({1, 3}), Face::of({2, 3})});
}

} // namespace

TEST_CASE("boundary matrices") {
    PrimeField f(kP);
    auto pts = SimplicialComplex::from_facets({Face::of({1}), Face::of({2}), Face::of({3})});
    GfMatrix aug = boundary_matrix(pts, 1, f);
    CHECK(aug.rows == 1);
    CHECK(aug.cols == 3);
    for (int j = 0; j < 3; ++j) CHECK(aug.at(0, j) == 1);

    CHECK(gf_rank(boundary_matrix(hollow_triangle(), 2, f)) == 2);

    SplitMix64 rng(51);
    for (int i = 0; i < 30; ++i) {
        auto cx = random_complex(5, rng);
        for (int c = 1; c <= cx.dim(); ++c) {
            GfMatrix lo = boundary_matrix(cx, c, f);
            GfMatrix hi = boundary_matrix(cx, c + 1, f);
            // composite must vanish
            for (int j = 0; j < hi.cols; ++j)
                for (int i2 = 0; i2 < lo.rows; ++i2) {
                    std::uint64_t acc = 0;
                    for (int k = 0; k < lo.cols; ++k) acc = f.add(acc, f.mul(lo.at(i2, k), hi.at(k, j)));
                    CHECK(acc == 0);
                }
        }
    }
}

TEST_CASE("reduced betti numbers") {
    CHECK(reduced_betti(SimplicialComplex::simplex(4), kP).dims == std::vector<long long>{0, 0, 0, 0, 0});

    BettiVector tri = reduced_betti(hollow_triangle(), kP);
    CHECK(tri.in_degree(-1) == 0);
    CHECK(tri.in_degree(0) == 0);
    CHECK(tri.in_degree(1) == 1);

    BettiVector ic7 = reduced_betti(independence_complex(cycle_graph(7)), kP);
    CHECK(ic7.in_degree(-1) == 0);
    CHECK(ic7.in_degree(0) == 0);
    CHECK(ic7.in_degree(1) == 1);
    CHECK(ic7.in_degree(2) == 0);

    CHECK(reduced_betti(SimplicialComplex::void_complex(3), kP).dims.empty());
    CHECK(reduced_betti(SimplicialComplex::empty_complex(2), kP).dims == std::vector<long long>{1});

    // two disjoint points: one extra connected component
    auto pts = SimplicialComplex::from_facets({Face::of({1}), Face::of({2})});
    CHECK(reduced_betti(pts, kP).in_degree(0) == 1);
}

TEST_CASE("euler consistency") {
    SplitMix64 rng(53);
    for (int i = 0; i < 60; ++i) {
        auto cx = random_complex(6, rng);
        FVector f = cx.f_vector();
        BettiVector b = reduced_betti(cx, kP);
        long long lhs = 0, rhs = 0;
        for (std::size_t c = 0; c < f.size(); ++c) lhs += (c % 2 == 0 ? -1 : 1) * f[c]; // reduced: includes the empty face
        for (std::size_t c = 0; c < b.dims.size(); ++c) rhs += (c % 2 == 0 ? -1 : 1) * b.dims[c];
        CHECK(lhs == rhs);
    }
}

TEST_CASE("cohen-macaulay") {
    CHECK(is_cohen_macaulay(SimplicialComplex::simplex(4), kP).cohen_macaulay);
    CHECK(is_cohen_macaulay(SimplicialComplex::empty_complex(0), kP).cohen_macaulay);
    CHECK(is_cohen_macaulay(hollow_triangle(), kP).cohen_macaulay);

    auto disconnected = SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({3, 4})});
    CmReport rep = is_cohen_macaulay(disconnected, kP);
    CHECK(!rep.cohen_macaulay);
    REQUIRE(rep.witness_face);
    CHECK(rep.witness_face->empty()); // already the empty face's link is disconnected
    CHECK(rep.witness_degree == 0);

    CHECK_THROWS_AS(is_cohen_macaulay(SimplicialComplex::void_complex(1), kP), domain_error);

    SECTION("CM implies pure and CM skeleta") {
        SplitMix64 rng(59);
        int found = 0;
        for (int i = 0; i < 200 && found < 25; ++i) {
            auto cx = random_complex(5, rng);
            if (!is_cohen_macaulay(cx, kP).cohen_macaulay) continue;
            ++found;
            CHECK(is_pure(cx));
            for (int r = 0; r <= cx.dim(); ++r) CHECK(is_cohen_macaulay(skeleton(cx, r), kP).cohen_macaulay);
        }
        CHECK(found > 0);
    }
}

TEST_CASE("sequential cohen-macaulayness") {
    CHECK(!is_sequentially_cm(independence_complex(cycle_graph(4)), kP));
    CHECK(is_sequentially_cm(independence_complex(cycle_graph(5)), kP));
    CHECK(is_sequentially_cm(SimplicialComplex::from_facets({Face::of({1, 2}), Face::of({1, 3}), Face::of({4})}), kP));

    SplitMix64 rng(61);
    for (int i = 0; i < 60; ++i) {
        auto cx = random_complex(5, rng);
        bool seq = is_sequentially_cm(cx, kP);
        if (is_shifted(cx)) CHECK(seq);
        if (seq && is_pure(cx)) CHECK(is_cohen_macaulay(cx, kP).cohen_macaulay);
    }
}

TEST_CASE("depth") {
    CHECK(depth(independence_complex(cycle_graph(4)), kP).depth == 0);
    CHECK(depth(independence_complex(cycle_graph(5)), kP).depth == 1);
    CHECK(depth(SimplicialComplex::simplex(5), kP).depth == 4);
    CHECK(depth(SimplicialComplex::empty_complex(0), kP).depth == -1);
    CHECK_THROWS_AS(depth(SimplicialComplex::void_complex(0), kP), domain_error);

    SECTION("bounds and characterizations") {
        SplitMix64 rng(67);
        for (int i = 0; i < 50; ++i) {
            auto cx = random_complex(5, rng);
            int d = depth(cx, kP).depth;
            CHECK(d <= min_facet_card(cx) - 1);
            CHECK(is_cohen_macaulay(cx, kP).cohen_macaulay == (d == cx.dim()));
            if (is_sequentially_cm(cx, kP)) CHECK(d == min_facet_card(cx) - 1);
        }
    }

    SECTION("links and shift methods agree") {
        SplitMix64 rng(71);
        for (int i = 0; i < 50; ++i) {
            auto cx = random_complex(6, rng);
            int dl = depth(cx, kP, DepthMethod::links).depth;
            int ds = depth(cx, kP, DepthMethod::shift).depth;
            CHECK(dl == ds);
        }
    }
}

TEST_CASE("depth of joins") {
    auto point = SimplicialComplex::simplex(1);
    CHECK(depth_of_join_check(point, point, kP));
    CHECK(depth(join(point, point), kP).depth == 1);

    SplitMix64 rng(73);
    for (int i = 0; i < 30; ++i) {
        auto a = random_complex(4, rng);
        auto b = random_complex(4, rng);
        CHECK(depth_of_join_check(a, b, kP));
    }

    // iterated joins: d factors of depth >= 0 give depth >= d-1
    for (int i = 0; i < 10; ++i) {
        auto acc = random_complex(3, rng);
        int parts = 2 + static_cast<int>(rng.below(2));
        for (int j = 1; j < parts; ++j) acc = join(acc, random_complex(3, rng));
        CHECK(depth(acc, kP).depth >= parts - 1);
    }
}
