#include "colorings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "egc.hpp"

namespace tf {

namespace {

int imod(int a, int m) { return ((a % m) + m) % m; }

// union-find with parity: find returns (root, parity to root)
struct ParityDsu {
    std::vector<int> parent, rank_, par;
    explicit ParityDsu(int n) : parent(n), rank_(n, 0), par(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::pair<int, int> find(int x) {
        int p = 0;
        while (parent[x] != x) {
            p ^= par[x];
            x = parent[x];
        }
        return {x, p};
    }
    // returns false on contradiction with required parity d between a and b
    bool unite(int a, int b, int d) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == d;
        if (rank_[ra] < rank_[rb]) {
            std::swap(ra, rb);
            std::swap(pa, pb);
        }
        parent[rb] = ra;
        par[rb] = pa ^ pb ^ d;
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
        return true;
    }
};

}  // namespace

ZigzagResult zigzag_coloring(const CutoutSpec& spec) {
    ZigzagResult out;
    out.geom = cutout_geometry(spec);
    const Graph& g = out.geom.g;
    const auto& ge = out.geom.gedges;
    const int m = static_cast<int>(ge.size());

    auto og = girth(g);
    if (og != std::optional<int>(4)) {
        out.result.reason = "cutout girth is not 4";
        return out;
    }
    auto cycles = enumerate_girth_cycles(g).cycles;

    // directions at each vertex: 0=E,1=W,2=N,3=S
    // edge -> geometric edge id; endpoints a (E/N end) and b (W/S end)
    std::vector<std::array<int, 4>> at(g.n, {-1, -1, -1, -1});
    for (int e = 0; e < m; ++e) {
        int da = ge[e].horizontal ? 0 : 2;
        int db = ge[e].horizontal ? 1 : 3;
        if (at[ge[e].a][da] >= 0 || at[ge[e].b][db] >= 0) {
            out.result.reason = "cutout is not grid-like";
            return out;
        }
        at[ge[e].a][da] = e;
        at[ge[e].b][db] = e;
    }

    // family 0: pairs {W,S},{E,N}; family 1: pairs {E,S},{W,N}; family 2
    // pairs {E,W},{N,S} (whole rows against whole columns / diagonal lines,
    // the split that works on the Klein bottle)
    std::string why;
    for (int fam = 0; fam < 3; ++fam) {
        const int pairs[3][2][2] = {
            {{1, 3}, {0, 2}}, {{0, 3}, {1, 2}}, {{0, 1}, {2, 3}}};
        // staircase cycles: same-pair edges at a vertex are consecutive
        ParityDsu cyc(m);
        for (int v = 0; v < g.n; ++v)
            for (int h = 0; h < 2; ++h)
                cyc.unite(at[v][pairs[fam][h][0]], at[v][pairs[fam][h][1]], 0);
        std::vector<int> cyc_of(m);
        for (int e = 0; e < m; ++e) cyc_of[e] = cyc.find(e).first;

        // split staircase cycles into two factors: the two pairs at every
        // vertex must land in different factors
        std::map<int, int> factor;
        bool ok = true;
        std::vector<std::pair<int, int>> constraints;
        for (int v = 0; v < g.n && ok; ++v) {
            int c0 = cyc_of[at[v][pairs[fam][0][0]]];
            int c1 = cyc_of[at[v][pairs[fam][1][0]]];
            if (c0 == c1) {
                ok = false;
                why = "a staircase cycle meets itself at a vertex";
            }
            constraints.emplace_back(c0, c1);
        }
        if (ok) {
            // 2-color the cycle conflict graph
            std::map<int, std::vector<int>> cg;
            for (auto [a, b] : constraints) {
                cg[a].push_back(b);
                cg[b].push_back(a);
            }
            for (auto& [root, _] : cg)
                if (!factor.count(root)) {
                    std::vector<int> stack = {root};
                    factor[root] = 0;
                    while (!stack.empty() && ok) {
                        int x = stack.back();
                        stack.pop_back();
                        for (int y : cg[x]) {
                            auto it = factor.find(y);
                            if (it == factor.end()) {
                                factor[y] = factor[x] ^ 1;
                                stack.push_back(y);
                            } else if (it->second == factor[x]) {
                                ok = false;
                                why = "staircase cycles are not 2-factorable";
                            }
                        }
                    }
                }
        }
        if (!ok) continue;

        // per-edge base offset within its factor. Staircase cycles alternate
        // horizontal and non-horizontal edges, so the horizontal flag works
        // for families 0 and 1; family 2 cycles are monotone, so alternate
        // along each cycle instead (consecutive edges get opposite offsets).
        ParityDsu alt(m);
        if (fam == 2) {
            for (int v = 0; v < g.n && ok; ++v)
                for (int h = 0; h < 2 && ok; ++h)
                    if (!alt.unite(at[v][pairs[fam][h][0]],
                                   at[v][pairs[fam][h][1]], 1)) {
                        ok = false;
                        why = "a factor cycle has odd length";
                    }
        }
        if (!ok) continue;
        auto offset = [&](int e) {
            return fam == 2 ? alt.find(e).second : (ge[e].horizontal ? 1 : 0);
        };

        // rainbow conditions: in each quadrangle each factor must own
        // exactly two edges, colored differently
        ParityDsu fix(m);  // parity variable x_c per staircase cycle, on roots
        for (const auto& c4 : cycles) {
            int per_factor[2][2], cnt[2] = {0, 0};
            for (int i = 0; i < 4 && ok; ++i) {
                int e = g.edge_index(c4[i], c4[(i + 1) % 4]);
                int f = factor[cyc_of[e]];
                if (cnt[f] >= 2) {
                    ok = false;
                    why = "a quadrangle has three edges in one factor";
                } else {
                    per_factor[f][cnt[f]++] = e;
                }
            }
            for (int f = 0; f < 2 && ok; ++f) {
                int a = per_factor[f][0], b = per_factor[f][1];
                int need = 1 ^ offset(a) ^ offset(b);
                if (!fix.unite(cyc_of[a], cyc_of[b], need)) {
                    ok = false;
                    why = "quadrangle rainbow conditions are inconsistent";
                }
            }
            if (!ok) break;
        }
        if (!ok) continue;

        EdgeColoring col(m, 0);
        for (int e = 0; e < m; ++e) {
            int base = factor[cyc_of[e]] == 0 ? 1 : 3;
            col[e] = base + (offset(e) ^ fix.find(cyc_of[e]).second);
        }
        out.result.applicable = true;
        out.result.coloring = col;
        // report staircase cycle structure
        for (int f = 0; f < 2; ++f) out.factor_cycles[f].clear();
        std::map<int, std::vector<int>> members;
        for (int e = 0; e < m; ++e) members[cyc_of[e]].push_back(e);
        for (auto& [root, es] : members) {
            // trace the cycle as a vertex sequence
            std::set<int> left(es.begin(), es.end());
            int e0 = es.front();
            std::vector<int> verts;
            int v = ge[e0].a, e = e0;
            do {
                verts.push_back(v);
                int w = (ge[e].a == v) ? ge[e].b : ge[e].a;
                left.erase(e);
                int nxt = -1;
                for (int d = 0; d < 4; ++d) {
                    int f2 = at[w][d];
                    if (f2 != e && left.count(f2)) nxt = f2;
                }
                v = w;
                if (nxt < 0) break;
                e = nxt;
            } while (true);
            out.factor_cycles[factor[root]].push_back(verts);
        }
        return out;
    }
    out.result.reason = why.empty() ? "no zigzag factorization applies" : why;
    return out;
}

Q4Colorings q4_mols_colorings() {
    Q4Colorings out;
    out.q4 = named("q4");
    const int m = static_cast<int>(out.q4.edges.size());
    out.f0.assign(m, 0);
    out.f1.assign(m, 0);
    out.f2.assign(m, 0);

    // vertex bits: bit i-1 of the label is coordinate i; antipodal classes
    // are labelled by their representative with top bit 0
    auto cls = [](int v) { return v < 8 ? v : v ^ 15; };

    // the two orthogonal Latin squares, indexed by [row class][col class]
    const int row_lab[4] = {0, 3, 5, 6}, col_lab[4] = {1, 2, 4, 7};
    const int L1[4][4] = {{1, 2, 3, 4}, {4, 3, 2, 1}, {2, 1, 4, 3}, {3, 4, 1, 2}};
    const int L2[4][4] = {{1, 2, 3, 4}, {3, 4, 1, 2}, {4, 3, 2, 1}, {2, 1, 4, 3}};
    int rpos[8], cpos[8];
    std::fill(rpos, rpos + 8, -1);
    std::fill(cpos, cpos + 8, -1);
    for (int k = 0; k < 4; ++k) {
        rpos[row_lab[k]] = k;
        cpos[col_lab[k]] = k;
    }
    for (int e = 0; e < m; ++e) {
        auto [u, v] = out.q4.edges[e];
        int diff = u ^ v;
        int dir = 0;
        while (!(diff >> dir & 1)) ++dir;
        out.f0[e] = dir + 1;
        int cu = cls(u), cv = cls(v);
        int r = rpos[cu] >= 0 ? cu : cv;
        int c = rpos[cu] >= 0 ? cv : cu;
        out.f1[e] = L1[rpos[r]][cpos[c]];
        out.f2[e] = L2[rpos[r]][cpos[c]];
    }
    return out;
}

PlgColoring wreath_plg_coloring(int n) {
    if (n <= 4) throw std::invalid_argument("wreath_plg_coloring: n must be > 4");
    PlgColoring out;
    CycleDecomposition cd = wreath_decomposition(n);
    out.plg = partial_line_graph_info(cd);
    const Graph& w = cd.base;
    out.coloring.assign(out.plg.g.edges.size(), 0);

    const int parts[3][2][2] = {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}};
    std::vector<int> T(n);
    for (int i = 0; i < n; ++i) T[i] = i % 2;
    if (n % 2 == 1) T[n - 1] = 2;

    auto half = [&](int t, int h) { return parts[t][h]; };
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < 2; ++b)
            for (int a = 0; a < 2; ++a)
                for (int c = 0; c < 2; ++c) {
                    int lft = w.edge_index(2 * imod(i - 1, n) + a, 2 * i + b);
                    int rgt = w.edge_index(2 * i + b, 2 * imod(i + 1, n) + c);
                    const int* h1 = half(T[i], c ^ 1 ^ b);
                    const int* h2 = half(T[imod(i - 1, n)], a ^ b);
                    int color = 0;
                    for (int x = 0; x < 2; ++x)
                        for (int y = 0; y < 2; ++y)
                            if (h1[x] == h2[y]) color = h1[x];
                    if (!color)
                        throw std::logic_error("wreath_plg_coloring: empty color intersection");
                    int k = out.plg.g.edge_index(std::min(lft, rgt), std::max(lft, rgt));
                    if (k < 0) throw std::logic_error("wreath_plg_coloring: missing edge");
                    out.coloring[k] = color;
                }
    return out;
}

EdgeColoring barrel_abcd_coloring(const PlgResult& plg) {
    if (plg.info.size() != plg.g.edges.size())
        throw std::invalid_argument("barrel_abcd_coloring: decomposition info missing");
    const int M[2][2] = {{1, 2}, {3, 4}};
    EdgeColoring col(plg.g.edges.size(), 0);
    for (size_t k = 0; k < plg.info.size(); ++k)
        col[k] = M[plg.info[k].red_head][plg.info[k].green_head];
    return col;
}

EdgeColoring aw_orbit_coloring(bool literal) {
    Graph aw = named("armanios-wells");
    struct Rep {
        int b1, i1, b2, i2;
    };
    const Rep reps[20] = {
        {0, 0, 2, 7}, {0, 1, 2, 2}, {1, 0, 3, 1}, {1, 1, 3, 2},
        {0, 0, 2, 1}, {0, 1, 2, 0}, {1, 0, 1, 3}, {3, 0, 3, 1},
        {0, 0, 3, 6}, {0, 1, 1, 4}, {1, 1, 2, 6}, {2, 1, 3, 3},
        {0, 0, 1, 3}, {0, 1, 3, 7}, {1, 0, 2, 5}, {2, 0, 3, 2},
        {0, 0, 2, 6}, {0, 1, 2, 7}, {1, 0, 1, 5}, {3, 1, 3, 2}};
    const int literal_cols[20] = {1, 1, 1, 1, 2, 2, 2, 2, 3, 3,
                                  3, 3, 4, 4, 4, 4, 5, 5, 5, 5};
    const int fixed_cols[20] = {1, 1, 5, 5, 2, 2, 2, 2, 3, 3,
                                3, 3, 4, 4, 4, 4, 5, 5, 1, 1};
    const int* cols = literal ? literal_cols : fixed_cols;
    EdgeColoring col(aw.edges.size(), 0);
    for (int r = 0; r < 20; ++r)
        for (int k = 0; k < 4; ++k) {
            int a = 8 * reps[r].b1 + (reps[r].i1 + 2 * k) % 8;
            int b = 8 * reps[r].b2 + (reps[r].i2 + 2 * k) % 8;
            int e = aw.edge_index(a, b);
            if (e < 0) throw std::logic_error("aw_orbit_coloring: missing edge");
            col[e] = cols[r];
        }
    return col;
}

namespace {

// frozen 5-coloring of the Petersen graph in the fixed edge labelling;
// pentagons rainbow, proper
const int kPetCols[15] = {1, 3, 5, 2, 4, 4, 2, 2, 4, 5, 3, 1, 3, 5, 1};

// row-edge colors (even copy, odd copy) per Petersen vertex
const int kPetRowCols[10][2] = {{2, 4}, {5, 3}, {1, 5}, {1, 3}, {1, 4},
                                {3, 2}, {5, 4}, {1, 2}, {3, 4}, {5, 2}};

// Deterministic proper 5-edge-coloring with every girth pentagon rainbow.
EdgeColoring pentagon_rainbow_coloring(const Graph& g) {
    auto cycles = enumerate_girth_cycles(g);
    if (cycles.g != 5) throw std::logic_error("pentagon_rainbow_coloring: girth not 5");
    const int m = static_cast<int>(g.edges.size());
    std::vector<std::vector<int>> cyc_edges;
    std::vector<std::vector<int>> on_edge(m);
    for (const auto& c : cycles.cycles) {
        std::vector<int> es;
        for (size_t i = 0; i < c.size(); ++i) {
            int e = g.edge_index(c[i], c[(i + 1) % c.size()]);
            on_edge[e].push_back(static_cast<int>(cyc_edges.size()));
            es.push_back(e);
        }
        cyc_edges.push_back(es);
    }
    EdgeColoring col(m, 0);
    auto ok = [&](int e, int c) {
        auto [u, v] = g.edges[e];
        for (int x : {u, v})
            for (int w : g.adj[x]) {
                int f = g.edge_index(std::min(x, w), std::max(x, w));
                if (f != e && col[f] == c) return false;
            }
        for (int ci : on_edge[e])
            for (int f : cyc_edges[ci])
                if (f != e && col[f] == c) return false;
        return true;
    };
    int e = 0;
    while (e >= 0 && e < m) {
        int c = col[e] + 1;
        col[e] = 0;
        for (; c <= 5; ++c)
            if (ok(e, c)) break;
        if (c <= 5) {
            col[e] = c;
            ++e;
        } else {
            --e;
        }
    }
    if (e < 0) throw std::logic_error("pentagon_rainbow_coloring: no coloring");
    return col;
}

}  // namespace

EdgeColoring barrel_tower_coloring(Tower which, int k) {
    if (k < 1) throw std::invalid_argument("barrel_tower_coloring: k must be >= 1");
    if (which == Tower::Pet) {
        Graph pet = named("petersen");
        Graph g = petersen_barrel(k);
        auto steps = petersen_tower_steps();
        const int len = 14 * k;
        EdgeColoring col(g.edges.size(), 0);
        for (int j = 0; j < len; ++j)
            for (size_t e = 0; e < pet.edges.size(); ++e) {
                auto [u, v] = pet.edges[e];
                col[g.edge_index(10 * j + u, 10 * j + v)] = kPetCols[e];
            }
        for (int j = 0; j < len; ++j)
            for (int v = 0; v < 10; ++v) {
                int a = 10 * j + v, b = 10 * ((j + steps[v]) % len) + v;
                col[g.edge_index(std::min(a, b), std::max(a, b))] =
                    kPetRowCols[v][j % 2];
            }
        return col;
    }
    if (which == Tower::TI) {
        Graph ti = named("truncated-icosahedron");
        Graph g = ti_barrel(k);
        auto steps = ti_tower_steps();
        EdgeColoring base = pentagon_rainbow_coloring(ti);
        const int len = 14 * k;
        EdgeColoring col(g.edges.size(), 0);
        for (int j = 0; j < len; ++j)
            for (size_t e = 0; e < ti.edges.size(); ++e) {
                auto [u, v] = ti.edges[e];
                col[g.edge_index(60 * j + u, 60 * j + v)] = base[e];
            }
        // row colors: the two colors missing at the base vertex, by parity
        for (int v = 0; v < ti.n; ++v) {
            bool have[6] = {};
            for (int u : ti.adj[v])
                have[base[ti.edge_index(std::min(u, v), std::max(u, v))]] = true;
            int mc[2], t = 0;
            for (int c = 1; c <= 5; ++c)
                if (!have[c]) mc[t++] = c;
            for (int j = 0; j < len; ++j) {
                int a = 60 * j + v, b = 60 * ((j + steps[v]) % len) + v;
                col[g.edge_index(std::min(a, b), std::max(a, b))] = mc[j % 2];
            }
        }
        return col;
    }
    // Dod tower: lifted dodecahedral colors in each copy, the long cycle
    // colored by the frozen period-10 pattern
    Graph dod = named("dodecahedron");
    Graph pet = named("petersen");
    Graph g = dod_barrel(k);
    // colors of the dodecahedron as the double cover of Petersen
    std::map<std::pair<int, int>, int> dcol;
    const std::set<std::pair<int, int>> within = {{4, 5}, {6, 7}, {8, 9}};
    for (size_t e = 0; e < pet.edges.size(); ++e) {
        auto [u, v] = pet.edges[e];
        int c = kPetCols[e];
        if (within.count({u, v})) {
            dcol[{u, v}] = c;
            dcol[{10 + u, 10 + v}] = c;
        } else {
            dcol[{std::min(u, 10 + v), std::max(u, 10 + v)}] = c;
            dcol[{std::min(v, 10 + u), std::max(v, 10 + u)}] = c;
        }
    }
    const int copies = 7 * k;
    EdgeColoring col(g.edges.size(), 0);
    for (int c = 0; c < copies; ++c)
        for (auto [u, v] : dod.edges)
            col[g.edge_index(20 * c + u, 20 * c + v)] = dcol.at({u, v});
    const auto& seq = dod_barrel_sequence();
    const auto& share = dod_barrel_cycle_colors();
    for (int rep = 0; rep < k; ++rep)
        for (int t = 0; t < 140; ++t) {
            auto [v1, c1] = seq[t];
            auto [v2, c2] = seq[(t + 1) % 140];
            int off2 = (t + 1 == 140) ? 7 * (rep + 1) : 7 * rep;
            int a = imod(c1 + 7 * rep, copies) * 20 + v1;
            int b = imod(c2 + off2, copies) * 20 + v2;
            col[g.edge_index(std::min(a, b), std::max(a, b))] = share[t];
        }
    return col;
}

}  // namespace tf
