#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "sgb/signed_graph.hpp"
#include "sgb/spc.hpp"
#include "test_util.hpp"

using namespace sgb;
using sgbtest::Rng;

TEST_CASE("switching is an involution and all-vertex switching is trivial") {
    Rng rng(7);
    for (int it = 0; it < 50; it++) {
        auto g = sgbtest::random_multigraph(rng, 6, 10);
        auto s = sgbtest::random_switching(rng, g.n);
        auto twice = switch_at(switch_at(g, s), s);
        for (int e = 0; e < g.m(); e++) CHECK(twice.edges[e].sign == g.edges[e].sign);
        Switching all = Switching::none(g.n);
        for (int v = 0; v < g.n; v++) all.flip[v] = 1;
        auto same = switch_at(g, all);
        for (int e = 0; e < g.m(); e++) CHECK(same.edges[e].sign == g.edges[e].sign);
    }
}

TEST_CASE("loops never change sign under switching") {
    SignedGraph g(2);
    g.add_edge(0, 0, -1);
    g.add_edge(0, 1, +1);
    Switching s = Switching::none(2);
    s.flip[0] = 1;
    auto h = switch_at(g, s);
    CHECK(h.edges[0].sign == -1);
    CHECK(h.edges[1].sign == -1);
}

TEST_CASE("cycle signs are switching invariant on C_-4") {
    auto g = negative_cycle(4);
    Switching s = Switching::none(4);
    s.flip[2] = 1;
    auto h = switch_at(g, s);
    int neg = 0;
    for (auto& e : h.edges)
        if (e.sign < 0) neg++;
    CHECK(neg % 2 == 1);
    CHECK(*negative_girth(h) == 4);
}

TEST_CASE("negative girth basics") {
    CHECK(*negative_girth(negative_cycle(4)) == 4);
    CHECK(!negative_girth(complete_graph(4, +1)).has_value());
    CHECK(*negative_girth(negative_cycle(1)) == 1);
    CHECK(*negative_girth(negative_cycle(2)) == 2);
    auto cube = spc(3);
    CHECK(*negative_girth(cube.graph) == 4);
}

TEST_CASE("shortest cycle by sign and parity") {
    // triangle plus a negative pendant digon
    SignedGraph g(4);
    g.add_edge(0, 1, +1);
    g.add_edge(1, 2, +1);
    g.add_edge(2, 0, +1);
    g.add_edge(0, 3, +1);
    g.add_edge(0, 3, -1);
    auto podd = shortest_cycle(g, SignSel::positive, ParitySel::odd);
    REQUIRE(podd.has_value());
    CHECK(podd->length == 3);
    auto neven = shortest_cycle(g, SignSel::negative, ParitySel::even);
    REQUIRE(neven.has_value());
    CHECK(neven->length == 2);
    CHECK(!shortest_cycle(g, SignSel::negative, ParitySel::odd).has_value());
}

TEST_CASE("shortest_cycle is invariant under switching") {
    Rng rng(11);
    for (int it = 0; it < 60; it++) {
        auto g = sgbtest::random_multigraph(rng, 7, 12);
        auto s = sgbtest::random_switching(rng, g.n);
        auto h = switch_at(g, s);
        for (auto sign : {SignSel::positive, SignSel::negative})
            for (auto par : {ParitySel::even, ParitySel::odd, ParitySel::any}) {
                auto a = shortest_cycle(g, sign, par);
                auto b = shortest_cycle(h, sign, par);
                CHECK(a.has_value() == b.has_value());
                if (a && b) CHECK(a->length == b->length);
            }
    }
}

TEST_CASE("switching equivalence recovers a hidden switching") {
    Rng rng(13);
    for (int it = 0; it < 60; it++) {
        auto g = sgbtest::random_multigraph(rng, 7, 12);
        auto s = sgbtest::random_switching(rng, g.n);
        auto h = switch_at(g, s);
        auto found = switching_equivalence(g, h);
        REQUIRE(found.has_value());
        auto back = switch_at(h, *found);
        for (int e = 0; e < g.m(); e++) CHECK(back.edges[e].sign == g.edges[e].sign);
    }
}

TEST_CASE("switching equivalence rejects different cycle signs") {
    auto a = positive_cycle(4);
    auto b = negative_cycle(4);
    CHECK(!switching_equivalence(a, b).has_value());
    SignedGraph p1(3), p2(3);
    p1.add_edge(0, 1, +1);
    p1.add_edge(1, 2, +1);
    p2.add_edge(0, 1, -1);
    p2.add_edge(1, 2, +1);
    CHECK(switching_equivalence(p1, p2).has_value());  // paths: no cycles
    SignedGraph q(3);
    q.add_edge(0, 1, +1);
    CHECK_THROWS_AS(switching_equivalence(p1, q), std::invalid_argument);
}

TEST_CASE("zaslavsky: equivalent iff all cycle signs agree") {
    Rng rng(17);
    for (int it = 0; it < 40; it++) {
        auto g = sgbtest::random_multigraph(rng, 6, 12);
        auto h = g;
        for (auto& e : h.edges) e.sign = sgbtest::rand_int(rng, 0, 1) ? 1 : -1;
        auto cyc = all_cycles(g);
        bool same_signs = true;
        for (auto& c : cyc) {
            int s1 = 1, s2 = 1;
            for (int e : c.edge_ids) {
                s1 *= g.edges[e].sign;
                s2 *= h.edges[e].sign;
            }
            if (s1 != s2) same_signs = false;
        }
        CHECK(switching_equivalence(g, h).has_value() == same_signs);
    }
}

TEST_CASE("algebraic distance") {
    SignedGraph g(2);
    g.add_edge(0, 1, -1);
    CHECK(*algebraic_distance(g, 0, 1) == -1);
    CHECK(*algebraic_distance(g, 0, 0) == 0);

    auto c = negative_cycle(4);                // negative edge joins 3 and 0
    CHECK(*algebraic_distance(c, 0, 2) == 2);  // tie broken positive
    CHECK(*algebraic_distance(c, 1, 3) == 2);
    CHECK(*algebraic_distance(c, 3, 0) == -1);
    CHECK(*d_plus(c, 0, 2) == 2);
    CHECK(*d_minus(c, 0, 2) == 2);

    SignedGraph two(3);
    two.add_edge(0, 1, +1);
    CHECK(!algebraic_distance(two, 0, 2).has_value());
}

TEST_CASE("in a bipartite signed graph d+ and d- share parity") {
    Rng rng(19);
    int checked = 0;
    for (int it = 0; it < 200 && checked < 60; it++) {
        auto g = sgbtest::random_multigraph(rng, 8, 12, false);
        if (!bipartition(g)) continue;
        for (int x = 0; x < g.n; x++)
            for (int y = 0; y < g.n; y++) {
                auto dp = d_plus(g, x, y), dm = d_minus(g, x, y);
                if (dp && dm) {
                    CHECK((*dp - *dm) % 2 == 0);
                    checked++;
                }
            }
    }
    CHECK(checked > 0);
}

TEST_CASE("homomorphism oracle on small targets") {
    SignedGraph e1(2);
    e1.add_edge(0, 1, +1);
    auto c4 = negative_cycle(4);
    auto f = find_homomorphism(e1, c4);
    REQUIRE(f.has_value());
    CHECK(verify_homomorphism(e1, c4, *f));

    CHECK(!find_homomorphism(negative_cycle(2), c4).has_value());

    auto cube = spc(3);
    auto g = find_homomorphism(c4, cube.graph);
    REQUIRE(g.has_value());
    CHECK(verify_homomorphism(c4, cube.graph, *g));
    // the straight embedding along a negative 4-cycle works untouched
    VertexMap direct;
    direct.image = {0, 4, 6, 7};  // 000, 100, 110, 111
    direct.switching = Switching::none(4);
    CHECK(verify_homomorphism(c4, cube.graph, direct));
    VertexMap collapse;
    collapse.image = {0, 0, 0, 0};
    collapse.switching = Switching::none(4);
    CHECK(!verify_homomorphism(c4, cube.graph, collapse));
}

TEST_CASE("identity map verifies") {
    Rng rng(37);
    for (int it = 0; it < 20; it++) {
        auto g = sgbtest::random_multigraph(rng, 5, 8);
        VertexMap id;
        id.image.resize(g.n);
        for (int v = 0; v < g.n; v++) id.image[v] = v;
        id.switching = Switching::none(g.n);
        CHECK(verify_homomorphism(g, g, id));
    }
}

TEST_CASE("oracle agrees with brute force over maps and switchings") {
    Rng rng(23);
    for (int it = 0; it < 120; it++) {
        auto g = sgbtest::random_multigraph(rng, 5, 7);
        auto b = sgbtest::random_multigraph(rng, 4, 6);
        auto f = find_homomorphism(g, b);
        if (f) CHECK(verify_homomorphism(g, b, *f));
        CHECK(f.has_value() == sgbtest::brute_force_hom(g, b));
    }
}

TEST_CASE("cycles that fail to map to C_-k") {
    auto tri = complete_graph(3, +1);
    auto w = contains_ok_element(tri, 4);
    REQUIRE(w.has_value());
    CHECK(w->length == 3);
    CHECK(w->sign == 1);

    auto c4 = negative_cycle(4);
    CHECK(!contains_ok_element(c4, 4).has_value());
    auto w6 = contains_ok_element(c4, 6);
    REQUIRE(w6.has_value());
    CHECK(w6->length == 4);
    CHECK(w6->sign == -1);

    // odd k: negative cycles of even length and positive odd cycles
    CHECK(!contains_ok_element(negative_cycle(7), 7).has_value());
    auto wneg = contains_ok_element(negative_cycle(4), 7);
    REQUIRE(wneg.has_value());
    CHECK(wneg->sign == -1);
    CHECK(wneg->length % 2 == 0);
    auto wpos = contains_ok_element(positive_cycle(9), 5);
    REQUIRE(wpos.has_value());
    CHECK(wpos->sign == 1);
    CHECK(wpos->length % 2 == 1);
    CHECK(!contains_ok_element(positive_cycle(8), 5).has_value());
}

TEST_CASE("witness detection matches bipartite plus girth for even k") {
    Rng rng(27);
    for (int it = 0; it < 80; it++) {
        auto g = sgbtest::random_multigraph(rng, 7, 11);
        for (int k : {2, 4, 6}) {
            auto witness = contains_ok_element(g, k);
            if (witness) {
                // the witness really is a cycle of the claimed class
                bool pos_odd = witness->sign > 0 && witness->length % 2 == 1;
                bool neg_short = witness->sign < 0 && witness->length < k;
                bool neg_parity = witness->sign < 0 && witness->length % 2 != k % 2;
                CHECK((pos_odd || neg_short || neg_parity));
            }
            auto girth = negative_girth(g);
            bool clean = bipartition(g).has_value() && (!girth || *girth >= k);
            CHECK(witness.has_value() == !clean);
        }
    }
}

TEST_CASE("named graphs") {
    auto c8 = circular_clique_all_negative(8, 3);
    CHECK(c8.n == 8);
    CHECK(c8.m() == 12);
    for (auto& e : c8.edges) CHECK(e.sign == -1);

    auto w = forbidden_minor_of_partial_3trees("wagner");
    CHECK(w.n == 8);
    CHECK(w.m() == 12);
    auto k5 = named_graph("k5", {});
    CHECK(k5.m() == 10);
    auto oct = named_graph("octahedron", {});
    CHECK(oct.m() == 12);
    for (int v = 0; v < 6; v++) CHECK(oct.degree(v) == 4);
    auto prism = named_graph("c5prism", {});
    CHECK(prism.m() == 15);
    auto c = named_graph("cneg", {4});
    CHECK(c.m() == 4);
    int neg = 0;
    for (auto& e : c.edges)
        if (e.sign < 0) neg++;
    CHECK(neg == 1);
    CHECK_THROWS_AS(named_graph("nope", {}), std::invalid_argument);
    CHECK_THROWS_AS(circular_clique_all_negative(5, 3), std::invalid_argument);
}

TEST_CASE("sg round trip is bit exact") {
    Rng rng(31);
    for (int it = 0; it < 30; it++) {
        auto g = sgbtest::random_multigraph(rng, 6, 10);
        auto text = to_sg(g);
        std::istringstream in(text);
        auto h = read_sg(in);
        CHECK(to_sg(h) == text);
    }
    std::istringstream bad("sg 2 1\n0 5 +\n");
    CHECK_THROWS_WITH_AS(read_sg(bad), "<stream>:2: edge endpoint out of range", std::runtime_error);
}

TEST_CASE("malformed sg inputs fail with line numbers") {
    auto expect_fail = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_sg(in), std::runtime_error);
    };
    expect_fail("");
    expect_fail("sg two 3\n");
    expect_fail("graph 2 1\n0 1 +\n");
    expect_fail("sg 2 2\n0 1 +\n");              // missing edge line
    expect_fail("sg 2 1\n0 1 ?\n");              // bad sign token
    expect_fail("sg 2 1\n0 1\n");                // short edge line
    expect_fail("sg -1 0\n");
    // comments and blank lines are fine anywhere
    std::istringstream ok("# header comment\nsg 2 1\n\n0 1 - # trailing\n");
    auto g = read_sg(ok);
    CHECK(g.m() == 1);
    CHECK(g.edges[0].sign == -1);
}
