#include <algorithm>

#include "doctest.h"
#include "families.hpp"
#include "graph.hpp"

using namespace tf;

TEST_CASE("graph construction normalizes and indexes edges") {
    Graph g(4, {{3, 1}, {0, 1}, {2, 0}}, "g");
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}});
    CHECK(g.edge_index(1, 0) == 0);
    CHECK(g.edge_index(3, 1) == 2);
    CHECK(g.edge_index(2, 3) == -1);
    CHECK(g.has_edge(0, 2));
    CHECK(g.degree(0) == 2);
    CHECK_FALSE(g.regular_degree().has_value());
    CHECK(g.connected());
    CHECK_THROWS(Graph(2, {{0, 0}}));
    CHECK_THROWS(Graph(2, {{0, 1}, {1, 0}}));
}

TEST_CASE("girth of standard graphs") {
    CHECK(girth(named("k4")) == 3);
    CHECK(girth(named("q3")) == 4);
    CHECK(girth(named("petersen")) == 5);
    CHECK(girth(named("k33")) == 4);
    CHECK(girth(named("coxeter")) == 7);
    CHECK(girth(named("pappus")) == 6);
    CHECK_FALSE(girth(Graph(3, {{0, 1}, {1, 2}})).has_value());
}

TEST_CASE("girth cycle enumeration counts") {
    CHECK(enumerate_girth_cycles(named("petersen")).cycles.size() == 12);
    CHECK(enumerate_girth_cycles(named("dodecahedron")).cycles.size() == 12);
    CHECK(enumerate_girth_cycles(named("q4")).cycles.size() == 24);
    CHECK(enumerate_girth_cycles(named("k4")).cycles.size() == 4);
    auto cs = enumerate_girth_cycles(named("q3"));
    CHECK(cs.g == 4);
    CHECK(cs.cycles.size() == 6);
    // canonical form: least rotation, sorted, no duplicates
    auto sorted = cs.cycles;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == cs.cycles);
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("signatures of catalog graphs") {
    auto sig = [](const Graph& g) { return signature(g).sig; };
    CHECK(sig(named("k4")) == std::vector<int>{2, 2, 2});
    CHECK(sig(named("q4")) == std::vector<int>{3, 3, 3, 3});
    CHECK(sig(named("dodecahedron")) == std::vector<int>{2, 2, 2});
    CHECK(sig(named("truncated-icosahedron")) == std::vector<int>{1, 1, 0});
    CHECK(sig(named("folkman")) == std::vector<int>{3, 3, 3, 3});
    CHECK(sig(named("armanios-wells")) == std::vector<int>{12, 12, 12, 12, 12});
    CHECK(sig(named("sylvester")) == std::vector<int>{8, 8, 8, 8, 8});
    CHECK(sig(circulant(10, 1, 3)) == std::vector<int>{6, 6, 6, 6});
    CHECK(sig(circulant(8, 1, 3)) == std::vector<int>{9, 9, 9, 9});
    CHECK(sig(circulant(14, 2, 3)) == std::vector<int>{2, 2, 2, 2});
    CHECK(sig(circulant(12, 2, 3)) == std::vector<int>{3, 3, 2, 2});
    for (int n = 5; n <= 7; ++n)
        CHECK(sig(wreath(n)) == std::vector<int>{5, 5, 5, 5});
}

TEST_CASE("signature flags non-girth-regular graphs") {
    // path-extended triangle: vertex degrees differ
    Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    auto s = signature(g);
    CHECK_FALSE(s.regular);
}

TEST_CASE("chromatic index class") {
    CHECK(chromatic_index_class(named("k4")) == CIClass::Class1);
    CHECK(chromatic_index_class(named("petersen")) == CIClass::Class2);
    CHECK(chromatic_index_class(named("q3")) == CIClass::Class1);
    CHECK(is_g_tight(named("k4")));
    CHECK_FALSE(is_g_tight(named("petersen")));
}

TEST_CASE("two factor cycles and properness") {
    Graph q3 = named("q3");
    // color by coordinate direction: a proper 3-coloring
    EdgeColoring col(q3.edges.size());
    for (size_t i = 0; i < q3.edges.size(); ++i) {
        auto [u, v] = q3.edges[i];
        int d = u ^ v;
        col[i] = d == 1 ? 1 : d == 2 ? 2 : 3;
    }
    CHECK(is_proper(q3, col));
    auto cyc = two_factor_cycles(q3, col, 1, 2);
    CHECK(cyc == std::vector<int>{4, 4});
    col[0] = col[1];
    CHECK_FALSE(is_proper(q3, col));
}
