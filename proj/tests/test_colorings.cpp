#include <algorithm>

#include "colorings.hpp"
#include "doctest.h"
#include "egc.hpp"
#include "families.hpp"

using namespace tf;

TEST_CASE("zigzag coloring on cutouts") {
    for (auto [r, t, s] : {std::array<int, 3>{6, 3, 3}, {12, 2, 4}, {10, 2, 4},
                           {22, 1, 5}, {6, 5, 1}, {10, 5, 5}, {8, 4, 2}}) {
        auto z = zigzag_coloring({Surface::Torus, r, t, s});
        REQUIRE_MESSAGE(z.result.applicable,
                        "zigzag (" << r << "," << t << "," << s << "): " << z.result.reason);
        CHECK(verify_egc(z.geom.g, z.result.coloring, 4).empty());
        // both factors cover every vertex once
        for (int f = 0; f < 2; ++f) {
            size_t covered = 0;
            for (const auto& cyc : z.factor_cycles[f]) covered += cyc.size();
            CHECK(covered == static_cast<size_t>(z.geom.g.n));
        }
    }
    auto z = zigzag_coloring({Surface::KleinBottle, 6, 3, 0});
    REQUIRE(z.result.applicable);
    CHECK(verify_egc(z.geom.g, z.result.coloring, 4).empty());
    // r = 2s creates all-vertical quadrangles no zigzag coloring can satisfy
    CHECK_FALSE(zigzag_coloring({Surface::Torus, 8, 2, 4}).result.applicable);
}

TEST_CASE("4-cube MOLS colorings") {
    auto q = q4_mols_colorings();
    CHECK(verify_egc(q.q4, q.f1, 4).empty());
    CHECK(verify_egc(q.q4, q.f2, 4).empty());
    CHECK_FALSE(verify_egc(q.q4, q.f0, 4).empty());  // direction coloring fails
    CHECK(q.f1 != q.f2);
    CHECK(is_proper(q.q4, q.f0));
}

TEST_CASE("wreath partial line graph coloring") {
    for (int n = 5; n <= 10; ++n) {
        auto w = wreath_plg_coloring(n);
        CHECK(verify_egc(w.plg.g, w.coloring, 4).empty());
    }
    CHECK_THROWS(wreath_plg_coloring(4));
}

TEST_CASE("barrel pattern coloring") {
    for (auto cd : {barrel(4, 5, 2), barrel(4, 8, 3), mutant_barrel(4, 8, 3),
                    mutant_barrel(2, 10, 3),
                    generalized_barrel(7, table_f7(0), {0, 1, 0, 1}, false),
                    generalized_barrel(7, table_f7(1), {0, 1, 0, 1}, false),
                    generalized_barrel(7, table_f7(2), {0, 1, 0, 1}, false),
                    generalized_barrel(9, table_f9(), {0, 1, 2, 3}, false),
                    generalized_barrel(8, table_f8(), {0, 1, 0, 1}, true)}) {
        auto plg = partial_line_graph_info(cd);
        auto col = barrel_abcd_coloring(plg);
        CHECK(verify_egc(plg.g, col, 4).empty());
    }
}

TEST_CASE("orbit coloring of the Armanios-Wells graph") {
    Graph aw = named("armanios-wells");
    CHECK(enumerate_girth_cycles(aw).cycles.size() == 192);
    auto col = aw_orbit_coloring();
    CHECK(verify_egc(aw, col, 5).empty());
    for (int c = 1; c <= 5; ++c)
        CHECK(std::count(col.begin(), col.end(), c) == 16);
    // the uniform per-row reading of the source table does not verify
    CHECK_FALSE(verify_egc(aw, aw_orbit_coloring(true), 5).empty());
}

TEST_CASE("tower colorings") {
    for (int k : {1, 2}) {
        Graph pb = petersen_barrel(k);
        CHECK(verify_egc(pb, barrel_tower_coloring(Tower::Pet, k), 5).empty());
    }
    Graph db = dod_barrel(1);
    CHECK(verify_egc(db, barrel_tower_coloring(Tower::Dod, 1), 5).empty());
    Graph db2 = dod_barrel(2);
    CHECK(verify_egc(db2, barrel_tower_coloring(Tower::Dod, 2), 5).empty());
    Graph tb = ti_barrel(1);
    CHECK(signature(tb).sig == std::vector<int>{1, 1, 0, 0, 0});
    CHECK(verify_egc(tb, barrel_tower_coloring(Tower::TI, 1), 5).empty());
}
