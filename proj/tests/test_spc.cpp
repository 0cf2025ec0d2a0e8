#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "sgb/signed_graph.hpp"
#include "sgb/spc.hpp"
#include "test_util.hpp"

using namespace sgb;
using sgbtest::Rng;

using sgbtest::signed_isomorphic;

TEST_CASE("projective cube construction") {
    auto s1 = spc(1);
    CHECK(s1.graph.n == 2);
    CHECK(s1.graph.m() == 2);  // a positive and a negative parallel edge
    CHECK(*negative_girth(s1.graph) == 2);

    auto s3 = spc(3);
    CHECK(s3.graph.n == 8);
    int pos = 0, neg = 0;
    for (auto& e : s3.graph.edges) (e.sign > 0 ? pos : neg)++;
    CHECK(pos == 12);
    CHECK(neg == 4);
    CHECK(*negative_girth(s3.graph) == 4);
    CHECK_THROWS_AS(spc(0), std::invalid_argument);
    CHECK_THROWS_AS(spc(21), std::invalid_argument);
}

TEST_CASE("negative girth climbs with the dimension") {
    for (int n = 2; n <= 5; n++) CHECK(*negative_girth(spc(n).graph) == n + 1);
}

TEST_CASE("edge labels are the endpoint differences") {
    for (int n : {2, 3, 4}) {
        auto s = spc(n);
        uint32_t full = (uint32_t(1) << n) - 1;
        for (int e = 0; e < s.graph.m(); e++) {
            uint32_t d = static_cast<uint32_t>(s.graph.edges[e].u ^ s.graph.edges[e].v);
            if (s.label[e] == n)
                CHECK(d == full);
            else
                CHECK(d == (uint32_t(1) << s.label[e]));
            CHECK((s.graph.edges[e].sign < 0) == (s.label[e] == n));
        }
    }
}

TEST_CASE("cycle sign dictates the label parities") {
    for (int n : {2, 3, 4}) {
        auto s = spc(n);
        auto cycles = all_cycles(s.graph);
        CHECK(cycles.size() > 2);
        long long bad = 0;
        for (auto& c : cycles) {
            std::vector<int> count(n + 1, 0);
            for (int e : c.edge_ids) count[s.label[e]]++;
            for (int l = 0; l <= n; l++)
                if (count[l] % 2 != (c.sign < 0 ? 1 : 0)) bad++;
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("pair positions") {
    auto p1 = spc_pair_position(3, 0, 4);  // 000 vs 100
    CHECK(p1.plus_size() == 1);
    CHECK(p1.algebraic_distance() == 1);
    auto p2 = spc_pair_position(3, 0, 7);
    CHECK(p2.plus_size() == 3);
    CHECK(p2.minus_size() == 1);
    CHECK(p2.algebraic_distance() == -1);
    auto p3 = spc_pair_position(3, 0, 6);
    CHECK(p3.plus_size() == 2);
    CHECK(p3.algebraic_distance() == 2);  // tie, positive
    CHECK_THROWS_AS(spc_pair_position(3, 5, 5), std::invalid_argument);
}

TEST_CASE("pair position symmetry and translation invariance") {
    Rng rng(73);
    for (int it = 0; it < 200; it++) {
        int n = sgbtest::rand_int(rng, 2, 6);
        uint32_t full = (uint32_t(1) << n) - 1;
        uint32_t u = static_cast<uint32_t>(sgbtest::rand_int(rng, 0, static_cast<int>(full)));
        uint32_t v = static_cast<uint32_t>(sgbtest::rand_int(rng, 0, static_cast<int>(full)));
        uint32_t a = static_cast<uint32_t>(sgbtest::rand_int(rng, 0, static_cast<int>(full)));
        if (u == v) continue;
        CHECK(spc_pair_position(n, u, v).plus_mask == spc_pair_position(n, v, u).plus_mask);
        CHECK(spc_pair_position(n, u ^ a, v ^ a).plus_mask == spc_pair_position(n, u, v).plus_mask);
    }
}

TEST_CASE("pair positions match algebraic distances in the graph") {
    auto s = spc(3);
    for (int u = 0; u < 8; u++)
        for (int v = 0; v < 8; v++) {
            if (u == v) continue;
            auto pp = spc_pair_position(3, static_cast<uint32_t>(u), static_cast<uint32_t>(v));
            CHECK(pp.algebraic_distance() == *algebraic_distance(s.graph, u, v));
        }
}

TEST_CASE("triple transitivity on matching profiles") {
    auto id = spc_triple_automorphism(3, {0, 4, 6}, {0, 4, 6});
    REQUIRE(id.has_value());
    CHECK(id->image[0] == 0);
    CHECK(id->image[4] == 4);
    CHECK(id->image[6] == 6);

    auto f = spc_triple_automorphism(3, {0, 4, 6}, {0, 2, 3});  // (000,100,110) -> (000,010,011)
    REQUIRE(f.has_value());
    CHECK(f->image[0] == 0);
    CHECK(f->image[4] == 2);
    CHECK(f->image[6] == 3);
    auto s = spc(3);
    CHECK(verify_homomorphism(s.graph, s.graph, *f));

    // distance profiles (1,1,2) vs (1,2,2) cannot be switched into each other
    CHECK(!spc_triple_automorphism(3, {0, 4, 6}, {0, 4, 2}).has_value());
    CHECK_THROWS_AS(spc_triple_automorphism(3, {0, 0, 1}, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("triple automorphisms are bijective and sign preserving") {
    Rng rng(79);
    auto s = spc(3);
    for (int it = 0; it < 100; it++) {
        std::array<uint32_t, 3> a{}, b{};
        auto draw = [&](std::array<uint32_t, 3>& tr) {
            do {
                for (auto& x : tr) x = static_cast<uint32_t>(sgbtest::rand_int(rng, 0, 7));
            } while (tr[0] == tr[1] || tr[1] == tr[2] || tr[0] == tr[2]);
        };
        draw(a);
        draw(b);
        auto f = spc_triple_automorphism(3, a, b);
        if (!f) continue;
        std::vector<char> hit(8, 0);
        for (int v = 0; v < 8; v++) hit[f->image[v]] = 1;
        for (int v = 0; v < 8; v++) CHECK(hit[v] == 1);
        CHECK(verify_homomorphism(s.graph, s.graph, *f));
        CHECK(f->image[a[0]] == static_cast<int>(b[0]));
        CHECK(f->image[a[1]] == static_cast<int>(b[1]));
        CHECK(f->image[a[2]] == static_cast<int>(b[2]));
    }
}

TEST_CASE("the all-even K4 lands on a coordinate plane") {
    auto k4 = WeightedClique::from_weights(2, {0, 1, 2, 3}, {2, 2, 2, 2, 2, 2});
    auto out = realize_k4_in_spc(2, k4);
    std::set<uint32_t> got(out.begin(), out.end());
    CHECK(got == std::set<uint32_t>{0, 3, 5, 6});
}

TEST_CASE("a negative 4-cycle with diagonals is realized") {
    // cycle weights +1,+1,+1,-1 around vertices 0..3, diagonals +2
    auto k4 = WeightedClique::from_weights(2, {0, 1, 2, 3}, {1, 2, -1, 1, 2, 1});
    // packed order: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
    auto out = realize_k4_in_spc(2, k4);
    CHECK(spc_pair_position(3, out[0], out[1]).algebraic_distance() == 1);
    CHECK(spc_pair_position(3, out[0], out[2]).algebraic_distance() == 2);
    CHECK(spc_pair_position(3, out[0], out[3]).algebraic_distance() == -1);
    CHECK(spc_pair_position(3, out[1], out[2]).algebraic_distance() == 1);
    CHECK(spc_pair_position(3, out[1], out[3]).algebraic_distance() == 2);
    CHECK(spc_pair_position(3, out[2], out[3]).algebraic_distance() == 1);
}

TEST_CASE("realization rejects cliques whose represented sums collapse") {
    // triangle (-1,-1,2) has negative representatives summing to 2k
    auto k4 = WeightedClique::from_weights(2, {0, 1, 2, 3}, {-1, 2, 1, -1, 2, 1});
    if (clique_is_2k_wide(k4)) CHECK_THROWS_AS(realize_k4_in_spc(2, k4), std::invalid_argument);
}

TEST_CASE("extended double cover fixtures") {
    SignedGraph k1(1);
    auto d1 = edc(k1);
    CHECK(d1.n == 2);
    CHECK(d1.m() == 1);
    CHECK(d1.edges[0].sign == -1);

    auto dc4 = edc(negative_cycle(4));
    auto c83 = circular_clique_all_negative(8, 3);
    CHECK(signed_isomorphic(c83, dc4));

    auto ds2 = edc(spc(2).graph);
    CHECK(signed_isomorphic(ds2, spc(3).graph));

    // a sanity negative: the double cover of C_+4 is balanced-free of
    // negative 4-cycles beyond the rungs, so it cannot match C(8,3)
    auto dpos = edc(positive_cycle(4));
    CHECK(!signed_isomorphic(c83, dpos));
}
