#include <algorithm>
#include <set>
#include <stdexcept>

#include "families.hpp"

namespace tf {

namespace {

int imod(int a, int m) { return ((a % m) + m) % m; }

// Circular tower over a base graph: copies of the base indexed by Z_len,
// plus row cycles: vertex v of copy j is joined to v of copies j +- step[v].
Graph tower(const Graph& base, int len, const std::vector<int>& step,
            const std::string& name) {
    std::set<std::pair<int, int>> es;
    auto vid = [&](int j, int v) { return imod(j, len) * base.n + v; };
    for (int j = 0; j < len; ++j)
        for (auto [u, v] : base.edges) es.emplace(vid(j, u), vid(j, v));
    for (int j = 0; j < len; ++j)
        for (int v = 0; v < base.n; ++v) {
            int a = vid(j, v), b = vid(j + step[v], v);
            es.emplace(std::min(a, b), std::max(a, b));
        }
    return Graph(len * base.n, {es.begin(), es.end()}, name);
}

// Deterministic proper vertex 3-coloring by backtracking in vertex order.
std::vector<int> vertex_3_coloring(const Graph& g) {
    std::vector<int> col(g.n, -1);
    int v = 0;
    while (v >= 0 && v < g.n) {
        int c = col[v] + 1;
        col[v] = -1;
        for (; c < 3; ++c) {
            bool ok = true;
            for (int u : g.adj[v])
                if (u < v && col[u] == c) {
                    ok = false;
                    break;
                }
            if (ok) break;
        }
        if (c < 3) {
            col[v] = c;
            ++v;
        } else {
            --v;
        }
    }
    if (v < 0) throw std::logic_error("vertex_3_coloring: no coloring");
    return col;
}

}  // namespace

std::vector<int> petersen_tower_steps() {
    std::vector<int> step(10, 1);
    for (int v : {1, 2, 3}) step[v] = 3;
    for (int v : {5, 7, 9}) step[v] = 5;
    return step;
}

std::vector<int> ti_tower_steps() {
    Graph ti = named("truncated-icosahedron");
    std::vector<int> col = vertex_3_coloring(ti);
    std::vector<int> step(ti.n);
    for (int v = 0; v < ti.n; ++v) step[v] = 2 * col[v] + 1;
    return step;
}

Graph petersen_barrel(int k) {
    if (k < 1) throw std::invalid_argument("petersen_barrel: k must be >= 1");
    return tower(named("petersen"), 14 * k, petersen_tower_steps(),
                 "PetB(" + std::to_string(k) + ")");
}

Graph ti_barrel(int k) {
    if (k < 1) throw std::invalid_argument("ti_barrel: k must be >= 1");
    return tower(named("truncated-icosahedron"), 14 * k, ti_tower_steps(),
                 "TIB(" + std::to_string(k) + ")");
}

// Frozen long-cycle data: a Hamiltonian-style traversal of the 140
// vertices of seven dodecahedra such that every vertex receives its two
// missing colors and no cycle of length <= 5 uses a traversal edge.
const std::vector<std::array<int, 2>>& dod_barrel_sequence() {
    static const std::vector<std::array<int, 2>> seq = {
        {0, 5}, {5, 1}, {8, 2}, {14, 6}, {12, 4}, {1, 3}, {5, 0},
        {10, 6}, {18, 2}, {1, 0}, {9, 3}, {15, 5}, {11, 1}, {16, 4},
        {14, 1}, {4, 0}, {0, 3}, {5, 5}, {5, 4}, {0, 2}, {8, 6},
        {18, 0}, {18, 1}, {8, 5}, {18, 4}, {3, 2}, {3, 3}, {15, 6},
        {17, 0}, {17, 5}, {9, 1}, {9, 4}, {9, 2}, {11, 6}, {13, 3},
        {12, 1}, {9, 0}, {7, 5}, {4, 4}, {18, 3}, {5, 2}, {0, 6},
        {10, 1}, {10, 2}, {14, 4}, {4, 3}, {18, 6}, {11, 0}, {6, 5},
        {6, 4}, {2, 3}, {3, 5}, {3, 0}, {13, 6}, {15, 2}, {15, 1},
        {11, 5}, {2, 0}, {3, 4}, {5, 3}, {7, 2}, {13, 1}, {5, 6},
        {19, 4}, {16, 1}, {0, 0}, {15, 3}, {1, 6}, {2, 5}, {13, 2},
        {15, 0}, {19, 3}, {9, 5}, {17, 4}, {7, 6}, {19, 2}, {19, 1},
        {19, 5}, {19, 6}, {0, 4}, {8, 0}, {1, 2}, {12, 3}, {17, 1},
        {10, 5}, {4, 2}, {13, 0}, {11, 3}, {2, 1}, {13, 4}, {11, 2},
        {16, 0}, {4, 6}, {13, 5}, {1, 1}, {2, 6}, {2, 4}, {6, 3},
        {6, 2}, {12, 5}, {3, 6}, {8, 1}, {10, 4}, {10, 3}, {14, 2},
        {7, 0}, {0, 1}, {6, 6}, {11, 4}, {1, 5}, {2, 2}, {17, 3},
        {17, 6}, {7, 4}, {10, 0}, {4, 1}, {7, 3}, {9, 6}, {1, 4},
        {18, 5}, {16, 3}, {19, 0}, {17, 2}, {14, 5}, {16, 6}, {6, 0},
        {16, 5}, {16, 2}, {8, 4}, {3, 1}, {14, 0}, {6, 1}, {12, 2},
        {14, 3}, {4, 5}, {12, 6}, {12, 0}, {7, 1}, {15, 4}, {8, 3}};
    return seq;
}

const std::vector<int>& dod_barrel_cycle_colors() {
    static const std::vector<int> ecol = {
        2, 3, 4, 1, 5, 3, 2, 4, 3, 5, 2, 3, 5, 4, 1, 4, 2, 3, 2, 4,
        3, 4, 3, 4, 3, 1, 3, 2, 1, 2, 5, 2, 5, 3, 1, 5, 2, 1, 4, 3,
        2, 4, 2, 4, 1, 4, 3, 5, 4, 5, 1, 3, 1, 3, 2, 3, 5, 1, 3, 2,
        1, 3, 2, 5, 4, 2, 3, 5, 1, 3, 2, 5, 2, 1, 2, 5, 2, 5, 2, 4,
        3, 5, 1, 2, 4, 1, 3, 5, 1, 3, 5, 4, 1, 3, 5, 1, 5, 4, 5, 1,
        3, 4, 2, 4, 1, 2, 4, 5, 3, 5, 1, 2, 1, 2, 4, 1, 2, 5, 3, 4,
        5, 2, 1, 4, 5, 4, 5, 4, 3, 1, 4, 5, 1, 4, 1, 5, 1, 2, 3, 4};
    return ecol;
}

Graph dod_barrel(int k) {
    if (k < 1) throw std::invalid_argument("dod_barrel: k must be >= 1");
    const auto& seq = dod_barrel_sequence();
    if (seq.size() != 140) throw std::logic_error("dod_barrel: sequence unavailable");
    Graph dod = named("dodecahedron");
    const int copies = 7 * k;
    std::set<std::pair<int, int>> es;
    auto vid = [&](int copy, int v) { return imod(copy, copies) * 20 + v; };
    for (int c = 0; c < copies; ++c)
        for (auto [u, v] : dod.edges) es.emplace(vid(c, u), vid(c, v));
    for (int rep = 0; rep < k; ++rep)
        for (size_t t = 0; t < seq.size(); ++t) {
            auto [v1, c1] = seq[t];
            auto [v2, c2] = seq[(t + 1) % seq.size()];
            int a = vid(c1 + 7 * rep, v1);
            int b = (t + 1 == seq.size()) ? vid(c2 + 7 * (rep + 1), v2)
                                          : vid(c2 + 7 * rep, v2);
            es.emplace(std::min(a, b), std::max(a, b));
        }
    return Graph(copies * 20, {es.begin(), es.end()}, "DodB(" + std::to_string(k) + ")");
}

}  // namespace tf
