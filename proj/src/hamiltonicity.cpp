#include "hamiltonicity.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "colorings.hpp"

namespace tf {

StarReport star_by_formula(const CutoutSpec& spec) {
    StarReport rep;
    if (spec.surface != Surface::Torus) {
        rep.reason = "formula applies to toroidal cutouts only";
        return rep;
    }
    if (spec.t < 2) {
        rep.reason = "t=1 rows are outside the formula's applicability";
        return rep;
    }
    if (spec.s == 0) {
        rep.reason = "s=0 is outside the formula's applicability";
        return rep;
    }
    int ga = std::gcd(spec.r, std::abs(spec.t - spec.s));
    int gb = std::gcd(spec.r, spec.s);
    int gc = std::gcd(spec.r, spec.t + spec.s);
    if (ga % 2 || gc % 2) {
        rep.reason = "half-gcd values are not integral";
        return rep;
    }
    rep.applicable = true;
    rep.triple = {ga / 2, gb, gc / 2};
    return rep;
}

StarReport star_by_oracle(const Graph& g, const EdgeColoring& c) {
    StarReport rep;
    if (!is_proper(g, c)) {
        rep.reason = "coloring is not proper";
        return rep;
    }
    for (int col : c)
        if (col < 1 || col > 4) {
            rep.reason = "coloring is not a 4-coloring";
            return rep;
        }
    const int partner[3] = {2, 3, 4};
    int counts[3];
    for (int i = 0; i < 3; ++i) {
        auto cyc = two_factor_cycles(g, c, 1, partner[i]);
        counts[i] = static_cast<int>(cyc.size());
        rep.lengths[i] = cyc;
        for (int len : rep.lengths[i])
            if (len != rep.lengths[i].front()) rep.equal_lengths[i] = false;
    }
    rep.applicable = true;
    rep.triple = {counts[0], counts[1], counts[2]};
    return rep;
}

std::vector<StarSweepRow> star_sweep(const std::vector<CutoutSpec>& specs) {
    std::vector<StarSweepRow> rows;
    for (const auto& sp : specs) {
        StarSweepRow row;
        row.r = sp.r;
        row.t = sp.t;
        row.s = sp.s;
        StarReport f = star_by_formula(sp);
        row.formula_ok = f.applicable;
        if (f.applicable)
            row.formula = f.triple;
        else
            row.note = f.reason;
        ZigzagResult z = zigzag_coloring(sp);
        if (z.result.applicable) {
            StarReport o = star_by_oracle(z.geom.g, z.result.coloring);
            row.oracle_ok = o.applicable;
            if (o.applicable) row.oracle = o.triple;
        } else if (row.note.empty()) {
            row.note = z.result.reason;
        }
        row.agree = row.formula_ok && row.oracle_ok && row.formula == row.oracle;
        rows.push_back(row);
    }
    return rows;
}

std::vector<EdgeColoring> one_factorizations(const Graph& g) {
    if (g.regular_degree() != std::optional<int>(3))
        throw std::invalid_argument("one_factorizations: graph is not cubic");
    const int m = static_cast<int>(g.edges.size());
    std::vector<EdgeColoring> out;
    EdgeColoring col(m, 0);
    // fix the palette on the star of vertex 0
    for (int i = 0; i < 3; ++i) col[g.edge_index(0, g.adj[0][i])] = i + 1;
    auto fits = [&](int e, int c) {
        auto [u, v] = g.edges[e];
        for (int w : g.adj[u])
            if (col[g.edge_index(u, w)] == c) return false;
        for (int w : g.adj[v])
            if (col[g.edge_index(v, w)] == c) return false;
        return true;
    };
    std::vector<int> free_edges;
    for (int e = 0; e < m; ++e)
        if (col[e] == 0) free_edges.push_back(e);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == free_edges.size()) {
            out.push_back(col);
            return;
        }
        int e = free_edges[k];
        for (int c = 1; c <= 3; ++c)
            if (fits(e, c)) {
                col[e] = c;
                rec(k + 1);
                col[e] = 0;
            }
    };
    rec(0);
    return out;
}

std::vector<std::pair<int, int>> hamiltonian_pairs(const Graph& g,
                                                   const EdgeColoring& c,
                                                   int kappa) {
    if (!is_proper(g, c))
        throw std::invalid_argument("hamiltonian_pairs: coloring not proper");
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= kappa; ++i)
        for (int j = i + 1; j <= kappa; ++j) {
            auto cyc = two_factor_cycles(g, c, i, j);
            if (cyc.size() == 1 && cyc.front() == g.n)
                out.emplace_back(i, j);
        }
    return out;
}

namespace {

StarTriple digits(int a, int b, int c) { return {a, b, c}; }

}  // namespace

const std::vector<PublishedStarCell>& published_table_cells() {
    // rows r = 6..30 even; blocks s=1 (t=5..15 odd), s=3 and s=5 (t=5,7,9);
    // letters a..f in the source stand for 10..15
    static const std::vector<PublishedStarCell> cells = {
        {6, 5, 1, digits(1, 1, 3)},
        {8, 5, 1, digits(2, 1, 1)},   {8, 7, 1, digits(1, 1, 4)},
        {10, 5, 1, digits(1, 1, 1)},  {10, 7, 1, digits(1, 1, 1)},
        {10, 9, 1, digits(5, 1, 1)},
        {12, 5, 1, digits(2, 1, 3)},  {12, 7, 1, digits(3, 1, 2)},
        {12, 9, 1, digits(1, 1, 2)},  {12, 11, 1, digits(1, 1, 6)},
        {14, 5, 1, digits(1, 1, 1)},  {14, 7, 1, digits(1, 1, 1)},
        {14, 9, 1, digits(1, 1, 1)},  {14, 11, 1, digits(1, 1, 1)},
        {14, 13, 1, digits(1, 1, 7)},
        {16, 5, 1, digits(2, 1, 1)},  {16, 7, 1, digits(1, 1, 4)},
        {16, 9, 1, digits(1, 1, 4)},  {16, 11, 1, digits(1, 1, 2)},
        {16, 13, 1, digits(2, 1, 1)}, {16, 15, 1, digits(1, 1, 8)},
        {18, 5, 1, digits(1, 1, 3)},  {18, 7, 1, digits(3, 1, 1)},
        {18, 9, 1, digits(1, 1, 1)},  {18, 11, 1, digits(3, 1, 1)},
        {18, 13, 1, digits(3, 1, 1)}, {18, 15, 1, digits(1, 1, 1)},
        {20, 5, 1, digits(2, 1, 1)},  {20, 7, 1, digits(1, 1, 2)},
        {20, 9, 1, digits(2, 1, 5)},  {20, 11, 1, digits(2, 1, 5)},
        {20, 13, 1, digits(1, 1, 2)}, {20, 15, 1, digits(1, 1, 2)},
        {22, 5, 1, digits(1, 1, 1)},  {22, 7, 1, digits(1, 1, 1)},
        {22, 9, 1, digits(1, 1, 1)},  {22, 11, 1, digits(1, 1, 1)},
        {22, 13, 1, digits(1, 1, 1)}, {22, 15, 1, digits(1, 1, 1)},
        {24, 5, 1, digits(2, 1, 3)},  {24, 7, 1, digits(3, 1, 4)},
        {24, 9, 1, digits(4, 1, 1)},  {24, 11, 1, digits(6, 1, 1)},
        {24, 13, 1, digits(6, 1, 1)}, {24, 15, 1, digits(1, 1, 4)},
        {26, 5, 1, digits(1, 1, 1)},  {26, 7, 1, digits(1, 1, 1)},
        {26, 9, 1, digits(1, 1, 1)},  {26, 11, 1, digits(1, 1, 1)},
        {26, 13, 1, digits(1, 1, 1)}, {26, 15, 1, digits(1, 1, 1)},
        {28, 5, 1, digits(2, 1, 1)},  {28, 7, 1, digits(1, 1, 2)},
        {28, 9, 1, digits(2, 1, 1)},  {28, 11, 1, digits(2, 1, 1)},
        {28, 13, 1, digits(2, 1, 7)}, {28, 15, 1, digits(7, 1, 1)},
        {30, 5, 1, digits(1, 1, 3)},  {30, 7, 1, digits(3, 1, 1)},
        {30, 9, 1, digits(1, 1, 5)},  {30, 11, 1, digits(1, 1, 5)},
        {30, 13, 1, digits(1, 1, 1)}, {30, 15, 1, digits(1, 1, 1)},
        {6, 5, 3, digits(1, 3, 1)},
        {8, 5, 3, digits(1, 1, 4)},   {8, 7, 3, digits(2, 1, 1)},
        {10, 5, 3, digits(1, 1, 1)},  {10, 7, 3, digits(5, 1, 1)},
        {10, 9, 3, digits(1, 1, 1)},
        {12, 5, 3, digits(1, 3, 2)},  {12, 7, 3, digits(2, 3, 3)},
        {12, 9, 3, digits(3, 3, 6)},
        {14, 5, 3, digits(1, 4, 1)},  {14, 7, 3, digits(1, 1, 1)},
        {14, 9, 3, digits(1, 1, 1)},
        {16, 5, 3, digits(4, 1, 1)},  {16, 7, 3, digits(1, 1, 2)},
        {16, 9, 3, digits(1, 1, 2)},
        {18, 5, 3, digits(1, 3, 1)},  {18, 7, 3, digits(1, 3, 1)},
        {18, 9, 3, digits(3, 3, 3)},
        {20, 5, 3, digits(2, 1, 1)},  {20, 7, 3, digits(5, 1, 2)},
        {20, 9, 3, digits(1, 1, 2)},
        {22, 5, 3, digits(1, 1, 1)},  {22, 7, 3, digits(1, 1, 1)},
        {22, 9, 3, digits(1, 1, 1)},
        {24, 5, 3, digits(1, 3, 3)},  {24, 7, 3, digits(2, 3, 1)},
        {24, 9, 3, digits(3, 3, 6)},
        {26, 5, 3, digits(1, 1, 1)},  {26, 7, 3, digits(1, 1, 1)},
        {26, 9, 3, digits(1, 1, 1)},
        {28, 5, 3, digits(1, 1, 2)},  {28, 7, 3, digits(2, 1, 1)},
        {28, 9, 3, digits(1, 1, 2)},
        {30, 5, 3, digits(1, 3, 2)},  {30, 7, 3, digits(1, 3, 5)},
        {30, 9, 3, digits(3, 3, 3)},
        {10, 5, 5, digits(5, 5, 5)},  {10, 7, 5, digits(1, 5, 1)},
        {10, 9, 5, digits(1, 5, 1)},
        {12, 5, 5, digits(6, 1, 1)},  {12, 7, 5, digits(6, 1, 1)},
        {12, 9, 5, digits(2, 1, 1)},
        {14, 5, 5, digits(7, 1, 1)},  {14, 7, 5, digits(1, 1, 1)},
        {14, 9, 5, digits(1, 1, 7)},
        {16, 5, 5, digits(8, 1, 1)},  {16, 7, 5, digits(2, 1, 1)},
        {16, 9, 5, digits(2, 1, 1)},
        {18, 5, 5, digits(9, 1, 1)},  {18, 7, 5, digits(1, 1, 1)},
        {18, 9, 5, digits(1, 1, 1)},
        {20, 5, 5, digits(10, 5, 1)}, {20, 7, 5, digits(2, 5, 1)},
        {20, 9, 5, digits(2, 5, 1)},
        {22, 5, 5, digits(11, 1, 1)}, {22, 7, 5, digits(1, 1, 1)},
        {22, 9, 5, digits(1, 1, 1)},
        {24, 5, 5, digits(12, 1, 1)}, {24, 7, 5, digits(2, 1, 1)},
        {24, 9, 5, digits(2, 1, 1)},
        {26, 5, 5, digits(13, 1, 1)}, {26, 7, 5, digits(1, 1, 1)},
        {26, 9, 5, digits(1, 1, 1)},
        {28, 5, 5, digits(14, 1, 1)}, {28, 7, 5, digits(2, 1, 1)},
        {28, 9, 5, digits(2, 1, 7)},
        {30, 5, 5, digits(15, 1, 1)}, {30, 7, 5, digits(1, 5, 1)},
        {30, 9, 5, digits(1, 1, 1)}};
    return cells;
}

const std::vector<PublishedStarCell>& published_display_cells() {
    static const std::vector<PublishedStarCell> cells = {
        {8, 2, 4, digits(1, 4, 1)},
        {10, 2, 4, digits(1, 2, 1)},
        {12, 2, 4, digits(1, 4, 3)},  {12, 2, 6, digits(1, 6, 2)},
        {14, 2, 4, digits(1, 2, 1)},  {14, 2, 6, digits(1, 2, 1)},
        {16, 2, 4, digits(1, 4, 1)},  {16, 2, 6, digits(1, 2, 4)},
        {18, 2, 4, digits(1, 2, 3)},  {18, 2, 6, digits(1, 3, 1)},
        {20, 2, 4, digits(1, 4, 1)},  {20, 2, 6, digits(1, 2, 2)},
        {22, 2, 4, digits(1, 2, 1)},  {22, 2, 6, digits(1, 2, 1)},
        {24, 2, 4, digits(1, 4, 3)},  {24, 2, 6, digits(1, 6, 4)}};
    return cells;
}

}  // namespace tf
