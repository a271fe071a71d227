#include "doctest.h"
#include "egc.hpp"
#include "families.hpp"

using namespace tf;

namespace {

Graph k5() {
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                     {2, 3}, {2, 4}, {3, 4}}, "K5");
}

}  // namespace

TEST_CASE("find_egc colors the girth-tight positives") {
    for (const char* nm : {"k4", "q4"}) {
        Graph g = named(nm);
        auto v = find_egc(g);
        REQUIRE(v.status == EgcStatus::Colored);
        CHECK(verify_egc(g, v.coloring, *g.regular_degree()).empty());
    }
}

TEST_CASE("find_egc is deterministic") {
    Graph g = torus44(6, 3, 3);
    auto a = find_egc(g), b = find_egc(g);
    CHECK(a.status == EgcStatus::Colored);
    CHECK(a.coloring == b.coloring);
    CHECK(a.nodes == b.nodes);
}

TEST_CASE("find_egc rejects the known negatives") {
    CHECK(find_egc(named("heawood-complement")).status == EgcStatus::Impossible);
    CHECK(find_egc(named("folkman")).status == EgcStatus::Impossible);
    CHECK(find_egc(circulant(10, 1, 3)).status == EgcStatus::Impossible);
    CHECK(find_egc(torus44(6, 3, 1)).status == EgcStatus::Impossible);
    CHECK(find_egc(torus44(8, 2, 4)).status == EgcStatus::Impossible);
}

TEST_CASE("verify_egc reports violations") {
    Graph g = named("k4");
    auto v = find_egc(g);
    REQUIRE(v.status == EgcStatus::Colored);
    auto bad = v.coloring;
    bad[0] = bad[1];  // adjacent edges share a color
    CHECK_FALSE(verify_egc(g, bad, 3).empty());
    CHECK_THROWS(verify_egc(g, {}, 3));
}

TEST_CASE("K23 obstruction certificates") {
    for (const Graph& g : {named("folkman"), wreath(6), circulant(10, 1, 3),
                           subdivided_double(wreath(5)),
                           subdivided_double(k5())}) {
        auto ob = find_k23_obstruction(g);
        REQUIRE(ob.has_value());
        REQUIRE(ob->size() == 5);
        int a = (*ob)[0], b = (*ob)[1];
        CHECK_FALSE(g.has_edge(a, b));
        for (int i = 2; i < 5; ++i) {
            CHECK(g.has_edge(a, (*ob)[i]));
            CHECK(g.has_edge(b, (*ob)[i]));
        }
    }
    CHECK_FALSE(find_k23_obstruction(named("q4")).has_value());
}

TEST_CASE("generalized snark detection") {
    CHECK(is_generalized_snark(named_multigraph("petersen")) == TriBool::True);
    CHECK(is_generalized_snark(named_multigraph("theta")) == TriBool::False);
    CHECK(is_generalized_snark(named_multigraph("k4")) == TriBool::False);
    CHECK(is_generalized_snark(named_multigraph("bridged-cycles-5")) == TriBool::True);
}

TEST_CASE("triangle replacement egc decision") {
    // egc of the triangle-replaced graph is exactly 3-edge-colorability of
    // the base multigraph
    for (const char* nm : {"theta", "k4", "q3", "k33", "dodecahedron", "coxeter"}) {
        Multigraph m = named_multigraph(nm);
        Graph g = nabla(m);
        CHECK(egc_120(g).status == EgcStatus::Colored);
    }
    for (const char* nm : {"petersen", "bridged-cycles-5"}) {
        Multigraph m = named_multigraph(nm);
        CHECK(egc_120(nabla(m)).status == EgcStatus::Impossible);
    }
}

TEST_CASE("girth cycle incidence graph of the Heawood complement") {
    Graph h = named("heawood-complement");
    Graph inc = girth_cycle_incidence_graph(h);
    int m = static_cast<int>(h.edges.size());
    CHECK(m == 28);
    CHECK(inc.n - m == 21);  // 21 quadrangles
    for (int v = 0; v < m; ++v) CHECK(inc.degree(v) == 3);
    for (int v = m; v < inc.n; ++v) CHECK(inc.degree(v) == 4);
}
