#include <algorithm>
#include <set>

#include "doctest.h"
#include "families.hpp"
#include "graph.hpp"

using namespace tf;

TEST_CASE("named catalog fingerprints") {
    for (const auto& nm : named_catalog()) {
        Graph g = named(nm);
        CHECK(g.n > 0);
        CHECK(g.connected());
        CHECK(g.regular_degree().has_value());
    }
    CHECK_THROWS(named("no-such-graph"));
    CHECK(named("st4").n == 24);  // alias of the star graph quotient
}

TEST_CASE("cutout graphs") {
    Graph t = torus44(6, 3, 3);
    CHECK(t.n == 18);
    CHECK(t.regular_degree() == 4);
    CHECK(girth(t) == 4);
    CHECK_THROWS_WITH(torus44(2, 1, 0), "degenerate cutout");
    Graph k = klein44(6, 3);
    CHECK(k.n == 18);
    CHECK(k.regular_degree() == 4);
    CHECK_THROWS(klein44(5, 3));
}

TEST_CASE("cutout geometry parallels the sorted edge list") {
    auto geo = cutout_geometry({Surface::Torus, 8, 3, 1});
    REQUIRE(geo.gedges.size() == geo.g.edges.size());
    int horizontals = 0;
    for (size_t i = 0; i < geo.gedges.size(); ++i) {
        auto [a, b] = std::minmax(geo.gedges[i].a, geo.gedges[i].b);
        CHECK(geo.g.edges[i] == std::pair<int, int>{a, b});
        horizontals += geo.gedges[i].horizontal;
    }
    CHECK(horizontals == 8 * 3);
}

TEST_CASE("circulant validations") {
    CHECK(circulant(10, 1, 3).n == 10);
    CHECK(circulant(10, 1, 3).regular_degree() == 4);
    CHECK_THROWS(circulant(6, 1, 2));   // too small
    CHECK_THROWS(circulant(10, 3, 1));  // i < j required
    CHECK_THROWS(circulant(10, 1, 5));  // 2j < n required
    CHECK_THROWS(circulant(12, 2, 4));  // gcd > 1 disconnects
}

TEST_CASE("wreath and its subdivided double") {
    Graph w = wreath(5);
    CHECK(w.n == 10);
    CHECK(w.regular_degree() == 4);
    CHECK(girth(w) == 4);
    Graph d = subdivided_double(w);
    CHECK(d.n == 2 * 10 + 20);
    CHECK(girth(d) == 4);
}

TEST_CASE("nabla round-trips small multigraphs") {
    for (const char* nm : {"theta", "k4", "q3", "k33", "petersen", "bridged-cycles-3"}) {
        Multigraph m = named_multigraph(nm);
        Graph g = nabla(m);
        CHECK(g.n == 3 * m.n);
        CHECK(g.regular_degree() == 3);
        CHECK(girth(g) == 3);
        auto inv = nabla_inverse(g);
        REQUIRE(inv.has_value());
        CHECK(inv->base.n == m.n);
        auto got = inv->base.edges;
        for (auto& [a, b] : got)
            if (a > b) std::swap(a, b);
        std::sort(got.begin(), got.end());
        auto want = m.edges;
        for (auto& [a, b] : want)
            if (a > b) std::swap(a, b);
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
    // K4 itself is not triangle-replaced (its triangles share edges)
    CHECK_FALSE(nabla_inverse(named("k4")).has_value());
}

TEST_CASE("prism construction") {
    Graph p = prism(named("k33"));
    CHECK(p.n == 12);
    CHECK(p.regular_degree() == 4);
    CHECK(girth(p) == 4);
}

TEST_CASE("barrel decompositions feed 4-regular partial line graphs") {
    for (auto cd : {barrel(4, 5, 2), barrel(4, 8, 3), mutant_barrel(2, 10, 3),
                    generalized_barrel(7, table_f7(1), {0, 1, 0, 1}, false),
                    generalized_barrel(9, table_f9(), {0, 1, 2, 3}, false),
                    generalized_barrel(8, table_f8(), {0, 1, 0, 1}, true)}) {
        CHECK(cd.base.regular_degree() == 4);
        // every vertex lies on one red and one green cycle
        std::vector<int> reds(cd.base.n, 0), greens(cd.base.n, 0);
        REQUIRE(cd.cls.size() == cd.cycles.size());
        for (size_t c = 0; c < cd.cycles.size(); ++c)
            for (int v : cd.cycles[c]) (cd.cls[c] == 0 ? reds : greens)[v]++;
        CHECK(std::count(reds.begin(), reds.end(), 1) == cd.base.n);
        CHECK(std::count(greens.begin(), greens.end(), 1) == cd.base.n);
        Graph plg = partial_line_graph(cd);
        CHECK(plg.n == static_cast<int>(cd.base.edges.size()));
        CHECK(plg.regular_degree() == 4);
        CHECK(girth(plg) == 4);
        CHECK(signature(plg).sig == std::vector<int>{1, 1, 1, 1});
    }
    CHECK_THROWS(barrel(4, 9, 2));   // 2*2 is not +-1 mod 9
    CHECK_THROWS(barrel(3, 8, 3));   // odd k
    CHECK_THROWS(barrel(4, 8, 1));   // r = 1 forbidden
}

TEST_CASE("wreath decomposition partial line graph") {
    for (int n = 5; n <= 8; ++n) {
        Graph plg = partial_line_graph(wreath_decomposition(n));
        CHECK(plg.n == 4 * n);
        CHECK(plg.regular_degree() == 4);
        CHECK(signature(plg).sig == std::vector<int>{1, 1, 1, 1});
    }
}

TEST_CASE("towers and barrels of girth 5") {
    Graph pb = petersen_barrel(1);
    CHECK(pb.n == 140);
    CHECK(pb.regular_degree() == 5);
    CHECK(girth(pb) == 5);
    CHECK(signature(pb).sig == std::vector<int>{4, 4, 4, 0, 0});
    Graph db = dod_barrel(1);
    CHECK(db.n == 140);
    CHECK(girth(db) == 5);
    CHECK(signature(db).sig == std::vector<int>{2, 2, 2, 0, 0});
    CHECK(enumerate_girth_cycles(db).cycles.size() == 84);  // 7 x 12 pentagons
    Graph db2 = dod_barrel(2);
    CHECK(db2.n == 280);
    CHECK(signature(db2).sig == std::vector<int>{2, 2, 2, 0, 0});
    // adjacent tower rows always use distinct steps
    auto steps = petersen_tower_steps();
    Graph pet = named("petersen");
    for (auto [u, v] : pet.edges) CHECK(steps[u] != steps[v]);
}

TEST_CASE("hexagonal quotients") {
    auto hq = hex_torus(4, 2, 1);
    CHECK(hq.g.n == 16);
    CHECK(hq.tiles == 8);
    CHECK(girth(hq.g) == 6);
    CHECK(hq.periods == std::array<int, 3>{4, 8, 8});
    // 8 facial hexagons plus 16 that wrap around the small quotient
    CHECK(enumerate_girth_cycles(hq.g).cycles.size() == 24);
    auto pap = hex_torus(3, 3, 1);
    CHECK(pap.periods == std::array<int, 3>{3, 9, 9});
    CHECK_THROWS(hex_torus(2, 2, 0));  // girth below 6
    Graph hk = hex_klein(4, 3);
    CHECK(hk.regular_degree() == 3);
    CHECK(girth(hk) == 6);
}
