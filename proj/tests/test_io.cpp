#include "doctest.h"
#include "egc.hpp"
#include "families.hpp"
#include "io.hpp"

using namespace tf;

TEST_CASE("graph JSON round trip") {
    Graph g = named("petersen");
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.n == g.n);
    CHECK(back.edges == g.edges);
    CHECK(back.name == g.name);
    CHECK_THROWS(graph_from_json("{\"n\": 2}"));
    CHECK_THROWS(graph_from_json("not json"));
}

TEST_CASE("coloring JSON round trip") {
    Graph g = named("k4");
    auto v = find_egc(g);
    REQUIRE(v.status == EgcStatus::Colored);
    int kappa = 0;
    EdgeColoring back = coloring_from_json(coloring_to_json(v.coloring, 3), &kappa);
    CHECK(kappa == 3);
    CHECK(back == v.coloring);
}

TEST_CASE("verdict JSON") {
    Graph g = named("folkman");
    auto v = find_egc(g);
    std::string j = verdict_to_json(v, 4);
    CHECK(j.find("\"impossible\"") != std::string::npos);
    CHECK(j.find("certificate") != std::string::npos);
}

TEST_CASE("DOT output") {
    Graph g = named("k4");
    auto v = find_egc(g);
    std::string dot = graph_to_dot(g, v.coloring);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("red") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    std::string plain = graph_to_dot(g, {});
    CHECK(plain.find("red") == std::string::npos);
}
