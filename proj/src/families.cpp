#include "families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tf {

namespace {

void add_edge_checked(std::set<std::pair<int, int>>& es, int a, int b,
                      const char* what) {
    if (a == b) throw std::invalid_argument(std::string(what) + ": loop");
    if (a > b) std::swap(a, b);
    if (!es.emplace(a, b).second)
        throw std::invalid_argument(std::string(what) + ": parallel edge");
}

int imod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

CutoutGeometry cutout_geometry(const CutoutSpec& spec) {
    const int r = spec.r, t = spec.t, s = spec.s;
    const bool klein = spec.surface == Surface::KleinBottle;
    std::string nm;
    if (klein) {
        if (r % 2 != 0 || r < 4 || t < 3 || s != 0)
            throw std::invalid_argument("degenerate cutout");
        nm = "klein44(" + std::to_string(r) + "," + std::to_string(t) + ")";
    } else {
        if (r < 3 || t < 1 || t > r || s < 0 || s >= r)
            throw std::invalid_argument("degenerate cutout");
        nm = "torus44(" + std::to_string(r) + "," + std::to_string(t) + "," +
             std::to_string(s) + ")";
    }
    auto vid = [&](int i, int j) { return j * r + imod(i, r); };
    CutoutGeometry out;
    std::set<std::pair<int, int>> seen;
    auto add = [&](int a, int b, bool horizontal) {
        if (a == b) throw std::invalid_argument("degenerate cutout");
        auto key = std::minmax(a, b);
        if (!seen.emplace(key.first, key.second).second)
            throw std::invalid_argument("degenerate cutout");
        out.gedges.push_back({a, b, horizontal});
    };
    if (!klein) {
        for (int j = 0; j < t; ++j)
            for (int i = 0; i < r; ++i) add(vid(i, j), vid(i + 1, j), true);
        // vertical edges; the top row closes onto row 0 shifted by s
        for (int j = 0; j + 1 < t; ++j)
            for (int i = 0; i < r; ++i) add(vid(i, j), vid(i, j + 1), false);
        for (int i = 0; i < r; ++i) add(vid(i, t - 1), vid(i + s, 0), false);
    } else {
        // top and bottom are identified directly; the left and right borders
        // are identified with reversed orientation, so edges crossing the
        // seam flip the row index
        auto kvid = [&](int i, int j) { return imod(j, t) * r + i; };
        for (int j = 0; j < t; ++j) {
            for (int i = 0; i + 1 < r; ++i) add(kvid(i, j), kvid(i + 1, j), true);
            add(kvid(r - 1, j), kvid(0, -j), true);
        }
        // (+1,+1) square-face diagonals
        for (int j = 0; j < t; ++j) {
            for (int i = 0; i + 1 < r; ++i)
                add(kvid(i, j), kvid(i + 1, j + 1), false);
            add(kvid(r - 1, j), kvid(0, -j - 1), false);
        }
    }
    // keep gedges parallel to the sorted edge list of the Graph
    std::sort(out.gedges.begin(), out.gedges.end(),
              [](const CutoutGeometry::GEdge& x, const CutoutGeometry::GEdge& y) {
                  return std::minmax(x.a, x.b) < std::minmax(y.a, y.b);
              });
    std::vector<std::pair<int, int>> es;
    for (const auto& e : out.gedges)
        es.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    out.g = Graph(r * t, std::move(es), nm);
    if (out.g.regular_degree() != std::optional<int>(4))
        throw std::invalid_argument("degenerate cutout");
    return out;
}

Graph torus44(int r, int t, int s) {
    return cutout_geometry({Surface::Torus, r, t, s}).g;
}

Graph klein44(int r, int t) {
    return cutout_geometry({Surface::KleinBottle, r, t, 0}).g;
}

Graph circulant(int n, int i, int j) {
    if (n <= 6 || i < 1 || i >= j || 2 * j >= n || std::gcd(std::gcd(n, i), j) != 1)
        throw std::invalid_argument("circulant: invalid parameters");
    std::set<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v) {
        add_edge_checked(es, v, imod(v + i, n), "circulant");
        es.emplace(std::min(v, imod(v + j, n)), std::max(v, imod(v + j, n)));
    }
    return Graph(n, {es.begin(), es.end()},
                 "C" + std::to_string(n) + "(" + std::to_string(i) + "," + std::to_string(j) + ")");
}

Graph wreath(int n) {
    if (n < 4) throw std::invalid_argument("wreath: n must be >= 4");
    // vertex (i, b) -> 2i + b
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                es.emplace_back(2 * i + a, 2 * imod(i + 1, n) + b);
    return Graph(2 * n, std::move(es), "W(" + std::to_string(n) + ",2)");
}

Graph subdivided_double(const Graph& g) {
    if (g.regular_degree() != std::optional<int>(4))
        throw std::invalid_argument("subdivided_double: input not 4-regular");
    // (v,0) -> v, (v,1) -> n+v, edge e -> 2n+e
    std::vector<std::pair<int, int>> es;
    for (size_t e = 0; e < g.edges.size(); ++e)
        for (int side = 0; side < 2; ++side) {
            es.emplace_back(side * g.n + g.edges[e].first, 2 * g.n + static_cast<int>(e));
            es.emplace_back(side * g.n + g.edges[e].second, 2 * g.n + static_cast<int>(e));
        }
    return Graph(2 * g.n + static_cast<int>(g.edges.size()), std::move(es), "DD(" + g.name + ")");
}

namespace {

// Proper 3-edge-coloring of a cubic multigraph, or empty if none.
std::vector<int> try_color3(const Multigraph& m) {
    const int E = static_cast<int>(m.edges.size());
    std::vector<int> col(E, 0);
    std::vector<unsigned> used(m.n, 0);
    int k = 0;
    while (k >= 0 && k < E) {
        auto [u, v] = m.edges[k];
        int c = col[k] + 1;
        if (col[k]) {
            used[u] &= ~(1u << col[k]);
            used[v] &= ~(1u << col[k]);
        }
        col[k] = 0;
        for (; c <= 3; ++c)
            if (!((used[u] | used[v]) >> c & 1u)) break;
        if (c <= 3) {
            col[k] = c;
            used[u] |= 1u << c;
            used[v] |= 1u << c;
            ++k;
        } else {
            --k;
        }
    }
    if (k < 0) return {};
    return col;
}

}  // namespace

NeighborhoodLabeling default_labeling(const Multigraph& m) {
    NeighborhoodLabeling rho;
    auto col = try_color3(m);
    rho.label.resize(m.edges.size());
    if (!col.empty()) {
        rho.symmetric = true;
        for (size_t e = 0; e < m.edges.size(); ++e) rho.label[e] = {col[e], col[e]};
        return rho;
    }
    // No symmetric labeling exists (generalized snark); assign per-vertex
    // slots in edge order.
    rho.symmetric = false;
    std::vector<int> next(m.n, 1);
    for (size_t e = 0; e < m.edges.size(); ++e) {
        auto [u, v] = m.edges[e];
        rho.label[e] = {next[u]++, next[v]++};
    }
    return rho;
}

Graph nabla(const Multigraph& m, const NeighborhoodLabeling& rho) {
    std::vector<int> deg(m.n, 0);
    for (auto [u, v] : m.edges) {
        ++deg[u];
        ++deg[v];
    }
    for (int d : deg)
        if (d != 3) throw std::invalid_argument("nabla: input not cubic");
    if (rho.label.size() != m.edges.size())
        throw std::invalid_argument("nabla: labeling size mismatch");
    std::vector<unsigned> seen(m.n, 0);
    for (size_t e = 0; e < m.edges.size(); ++e) {
        auto [u, v] = m.edges[e];
        auto [lu, lv] = rho.label[e];
        if (lu < 1 || lu > 3 || lv < 1 || lv > 3 || (seen[u] >> lu & 1u) ||
            (seen[v] >> lv & 1u))
            throw std::invalid_argument("nabla: invalid labeling");
        seen[u] |= 1u << lu;
        seen[v] |= 1u << lv;
    }
    // corner (u, i) for label i in {1,2,3} -> 3u + i - 1
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < m.n; ++u) {
        es.emplace_back(3 * u, 3 * u + 1);
        es.emplace_back(3 * u, 3 * u + 2);
        es.emplace_back(3 * u + 1, 3 * u + 2);
    }
    for (size_t e = 0; e < m.edges.size(); ++e) {
        auto [u, v] = m.edges[e];
        es.emplace_back(3 * u + rho.label[e][0] - 1, 3 * v + rho.label[e][1] - 1);
    }
    return Graph(3 * m.n, std::move(es), "nabla(" + m.name + ")");
}

Graph nabla(const Multigraph& m) { return nabla(m, default_labeling(m)); }

std::optional<NablaInverseResult> nabla_inverse(const Graph& g) {
    if (g.regular_degree() != std::optional<int>(3)) return std::nullopt;
    // every vertex must lie in exactly one triangle
    std::vector<int> tri_of(g.n, -1);
    std::vector<std::array<int, 3>> tris;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (v > u)
                for (int w : g.adj[v])
                    if (w > v && g.has_edge(u, w)) {
                        if (tri_of[u] >= 0 || tri_of[v] >= 0 || tri_of[w] >= 0)
                            return std::nullopt;  // vertex in two triangles
                        tri_of[u] = tri_of[v] = tri_of[w] = static_cast<int>(tris.size());
                        tris.push_back({u, v, w});
                    }
    for (int u = 0; u < g.n; ++u)
        if (tri_of[u] < 0) return std::nullopt;
    NablaInverseResult r;
    r.base.n = static_cast<int>(tris.size());
    r.base.name = "contract(" + g.name + ")";
    r.corners = tris;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        if (tri_of[u] == tri_of[v]) continue;  // triangle edge
        r.base.edges.emplace_back(std::min(tri_of[u], tri_of[v]),
                                  std::max(tri_of[u], tri_of[v]));
        r.graph_edge.push_back(static_cast<int>(e));
    }
    r.rho = default_labeling(r.base);
    return r;
}

Graph prism(const Graph& g) {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges) {
        es.emplace_back(u, v);
        es.emplace_back(g.n + u, g.n + v);
    }
    for (int v = 0; v < g.n; ++v) es.emplace_back(v, g.n + v);
    return Graph(2 * g.n, std::move(es), "prism(" + g.name + ")");
}

CycleDecomposition wreath_decomposition(int n) {
    if (n <= 4) throw std::invalid_argument("wreath_decomposition: n must be > 4");
    CycleDecomposition cd;
    cd.base = wreath(n);
    for (int i = 0; i < n; ++i) {
        int j = imod(i + 1, n);
        cd.cycles.push_back({2 * i, 2 * j, 2 * i + 1, 2 * j + 1});
    }
    return cd;
}

PlgResult partial_line_graph_info(const CycleDecomposition& cd) {
    const Graph& b = cd.base;
    if (b.regular_degree() != std::optional<int>(4))
        throw std::invalid_argument("partial_line_graph: base not 4-regular");
    const int m = static_cast<int>(b.edges.size());
    // consecutive pairs at each vertex, and per-cycle edge orientation
    // pair_at[v] lists {edge_a, edge_b, cycle} of consecutive edges at v
    std::vector<char> in_cycle(m, 0);
    struct Pass {
        int e1, e2, cyc;       // consecutive edges at this vertex
        int head1, head2;      // 1 if the oriented cycle enters v on e_i
    };
    std::vector<std::vector<Pass>> passes(b.n);
    for (size_t ci = 0; ci < cd.cycles.size(); ++ci) {
        const auto& cyc = cd.cycles[ci];
        const int L = static_cast<int>(cyc.size());
        for (int k = 0; k < L; ++k) {
            int prev = cyc[imod(k - 1, L)], v = cyc[k], next = cyc[imod(k + 1, L)];
            int e1 = b.edge_index(prev, v), e2 = b.edge_index(v, next);
            if (e1 < 0 || e2 < 0)
                throw std::invalid_argument("partial_line_graph: cycle edge missing");
            passes[v].push_back({e1, e2, static_cast<int>(ci), 1, 0});
            in_cycle[e1] = 1;
        }
    }
    for (int e = 0; e < m; ++e)
        if (!in_cycle[e])
            throw std::invalid_argument("partial_line_graph: edge not covered");
    PlgResult out;
    std::vector<std::pair<int, int>> es;
    std::vector<PlgResult::EdgeInfo> info;
    const bool classed = !cd.cls.empty();
    for (int v = 0; v < b.n; ++v) {
        if (passes[v].size() != 2)
            throw std::invalid_argument("partial_line_graph: vertex not on two cycle passes");
        const Pass& p = passes[v][0];
        const Pass& q = passes[v][1];
        // adjacency: pairs sharing v that are not consecutive on a cycle
        for (int pe : {p.e1, p.e2})
            for (int qe : {q.e1, q.e2}) {
                es.emplace_back(std::min(pe, qe), std::max(pe, qe));
                PlgResult::EdgeInfo ei;
                ei.base_vertex = v;
                int pcls = classed ? cd.cls[p.cyc] : 0;
                int qcls = classed ? cd.cls[q.cyc] : 1;
                if (classed && pcls == qcls)
                    throw std::invalid_argument("partial_line_graph: vertex cycles same class");
                int rede = pcls == 0 ? pe : qe;
                int greene = pcls == 0 ? qe : pe;
                ei.red_edge = rede;
                ei.green_edge = greene;
                // head flag: the oriented pass enters v along e1
                auto head_of = [&](const Pass& ps, int e) { return e == ps.e1 ? 1 : 0; };
                ei.red_head = head_of(pcls == 0 ? p : q, rede);
                ei.green_head = head_of(pcls == 0 ? q : p, greene);
                info.push_back(ei);
            }
    }
    // edges were generated vertex by vertex; sort with parallel info
    std::vector<int> idx(es.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int c) { return es[a] < es[c]; });
    std::vector<std::pair<int, int>> es2;
    for (int k : idx) {
        es2.push_back(es[k]);
        out.info.push_back(info[k]);
    }
    out.g = Graph(m, es2, "PLG(" + b.name + ")");
    return out;
}

Graph partial_line_graph(const CycleDecomposition& cd) {
    return partial_line_graph_info(cd).g;
}

namespace {

CycleDecomposition barrel_impl(int k, int n, int r, bool mutant) {
    const char* what = mutant ? "mutant_barrel" : "barrel";
    if (mutant) {
        if (k < 2 || k % 2 != 0) throw std::invalid_argument(std::string(what) + ": k must be even >= 2");
        if (n < 6 || n % 2 != 0) throw std::invalid_argument(std::string(what) + ": n must be even >= 6");
    } else {
        if (k < 4 || k % 2 != 0) throw std::invalid_argument(std::string(what) + ": k must be even >= 4");
        if (n < 5) throw std::invalid_argument(std::string(what) + ": n must be >= 5");
    }
    if (r < 0 || 2 * r >= n) throw std::invalid_argument(std::string(what) + ": need 0 <= r < n/2");
    int r2 = imod(r * r, n);
    if (r2 != 1 && r2 != n - 1)
        throw std::invalid_argument(std::string(what) + ": r^2 != +-1 (mod n)");
    if (imod(r, n) == 1 || imod(r, n) == n - 1)
        throw std::invalid_argument(std::string(what) + ": r == +-1 (mod n) forbidden");
    auto vid = [&](int i, int j) { return imod(i, k) * n + imod(j, n); };
    CycleDecomposition cd;
    std::vector<std::pair<int, int>> es;
    // red: columns (mutant: long columns through the n/2 shift)
    if (!mutant) {
        for (int j = 0; j < n; ++j) {
            std::vector<int> cyc;
            for (int i = 0; i < k; ++i) {
                cyc.push_back(vid(i, j));
                es.emplace_back(vid(i, j), vid(i + 1, j));
            }
            cd.cycles.push_back(cyc);
            cd.cls.push_back(0);
        }
    } else {
        std::vector<char> done(n, 0);
        for (int j0 = 0; j0 < n; ++j0) {
            if (done[j0]) continue;
            std::vector<int> cyc;
            int j = j0;
            do {
                done[j] = 1;
                for (int i = 0; i < k; ++i) {
                    cyc.push_back(vid(i, j));
                    if (i + 1 < k) es.emplace_back(vid(i, j), vid(i + 1, j));
                }
                es.emplace_back(vid(k - 1, j), vid(0, j + n / 2));
                j = imod(j + n / 2, n);
            } while (j != j0);
            cd.cycles.push_back(cyc);
            cd.cls.push_back(0);
        }
    }
    // green: row i uses step r^i mod n
    int step = 1;
    for (int i = 0; i < k; ++i) {
        std::vector<char> done(n, 0);
        for (int j0 = 0; j0 < n; ++j0) {
            if (done[j0]) continue;
            std::vector<int> cyc;
            int j = j0;
            do {
                done[j] = 1;
                cyc.push_back(vid(i, j));
                es.emplace_back(vid(i, j), vid(i, j + step));
                j = imod(j + step, n);
            } while (j != j0);
            cd.cycles.push_back(cyc);
            cd.cls.push_back(1);
        }
        step = imod(step * r, n);
    }
    std::sort(es.begin(), es.end());
    std::string nm = std::string(mutant ? "MBr(" : "Br(") + std::to_string(k) + "," +
                     std::to_string(n) + ";" + std::to_string(r) + ")";
    cd.base = Graph(k * n, es, nm);
    return cd;
}

}  // namespace

CycleDecomposition barrel(int k, int n, int r) { return barrel_impl(k, n, r, false); }
CycleDecomposition mutant_barrel(int k, int n, int r) { return barrel_impl(k, n, r, true); }

CycleDecomposition generalized_barrel(
    int n, const std::vector<std::vector<std::vector<int>>>& factors,
    const std::vector<int>& sequence, bool mutant) {
    const int ell = static_cast<int>(sequence.size());
    if (ell < 3) throw std::invalid_argument("generalized_barrel: need at least 3 copies");
    if (mutant && n % 2 != 0)
        throw std::invalid_argument("generalized_barrel: mutant requires even n");
    for (int i = 0; i < ell; ++i) {
        if (sequence[i] < 0 || sequence[i] >= static_cast<int>(factors.size()))
            throw std::invalid_argument("generalized_barrel: bad factor index");
        if (sequence[i] == sequence[imod(i + 1, ell)])
            throw std::invalid_argument("generalized_barrel: contiguous equal factors");
    }
    for (const auto& f : factors) {
        std::vector<int> deg(n, 0);
        for (const auto& cyc : f) {
            if (cyc.size() < 3)
                throw std::invalid_argument("generalized_barrel: factor cycle too short");
            for (int v : cyc) {
                if (v < 0 || v >= n) throw std::invalid_argument("generalized_barrel: bad vertex");
                deg[v] += 2;
            }
        }
        for (int d : deg)
            if (d != 2)
                throw std::invalid_argument("generalized_barrel: entry not a 2-factor");
    }
    auto vid = [&](int i, int j) { return imod(i, ell) * n + imod(j, n); };
    CycleDecomposition cd;
    std::vector<std::pair<int, int>> es;
    if (!mutant) {
        for (int j = 0; j < n; ++j) {
            std::vector<int> cyc;
            for (int i = 0; i < ell; ++i) {
                cyc.push_back(vid(i, j));
                es.emplace_back(vid(i, j), vid(i + 1, j));
            }
            cd.cycles.push_back(cyc);
            cd.cls.push_back(0);
        }
    } else {
        std::vector<char> done(n, 0);
        for (int j0 = 0; j0 < n; ++j0) {
            if (done[j0]) continue;
            std::vector<int> cyc;
            int j = j0;
            do {
                done[j] = 1;
                for (int i = 0; i < ell; ++i) {
                    cyc.push_back(vid(i, j));
                    if (i + 1 < ell) es.emplace_back(vid(i, j), vid(i + 1, j));
                }
                es.emplace_back(vid(ell - 1, j), vid(0, j + n / 2));
                j = imod(j + n / 2, n);
            } while (j != j0);
            cd.cycles.push_back(cyc);
            cd.cls.push_back(0);
        }
    }
    for (int i = 0; i < ell; ++i)
        for (const auto& cyc : factors[sequence[i]]) {
            std::vector<int> c2;
            const int L = static_cast<int>(cyc.size());
            for (int k = 0; k < L; ++k) {
                c2.push_back(vid(i, cyc[k]));
                es.emplace_back(vid(i, cyc[k]), vid(i, cyc[(k + 1) % L]));
            }
            cd.cycles.push_back(c2);
            cd.cls.push_back(1);
        }
    std::sort(es.begin(), es.end());
    cd.base = Graph(ell * n, es, "GBr");
    return cd;
}

std::vector<std::vector<std::vector<int>>> table_f7(int variant) {
    switch (variant) {
        case 0:
            return {{{0, 1, 2, 3, 4, 5, 6}},
                    {{0, 2, 4, 6, 1, 3, 5}},
                    {{0, 3, 6, 2, 5, 1, 4}}};
        case 1:
            return {{{0, 1, 5, 2, 4, 3, 6}},
                    {{1, 2, 0, 3, 5, 4, 6}},
                    {{2, 3, 1, 4, 0, 5, 6}}};
        case 2:
            return {{{0, 1, 6}, {2, 3, 4, 5}},
                    {{0, 3, 1, 5}, {2, 4, 6}},
                    {{0, 2, 1, 4}, {3, 5, 6}}};
        default:
            throw std::invalid_argument("table_f7: variant must be 0, 1 or 2");
    }
}

std::vector<std::vector<std::vector<int>>> table_f9() {
    // color classes of C9(1,2,3,4): steps 1, 2, 4 and the 3K3 class (step 3)
    auto step_factor = [&](int s) {
        std::vector<std::vector<int>> f;
        std::vector<char> done(9, 0);
        for (int j0 = 0; j0 < 9; ++j0) {
            if (done[j0]) continue;
            std::vector<int> cyc;
            int j = j0;
            do {
                done[j] = 1;
                cyc.push_back(j);
                j = imod(j + s, 9);
            } while (j != j0);
            f.push_back(cyc);
        }
        return f;
    };
    return {step_factor(1), step_factor(2), step_factor(4), step_factor(3)};
}

std::vector<std::vector<std::vector<int>>> table_f8() {
    return {{{0, 1, 2, 3, 4, 5, 6, 7}},
            {{0, 3, 6, 1, 4, 7, 2, 5}},
            {{0, 2, 4, 6}, {1, 3, 5, 7}}};
}

HexQuotient hex_torus(int m, int n, int sigma, bool allow_small) {
    // Brick-wall model: vertices (i, j, p) with p in {0,1}; the p=0 vertex of
    // brick (i,j) is adjacent to the p=1 vertices of bricks (i,j), (i-1,j)
    // and (i,j-1). Quotient of the plane by (m,0) and (sigma,n).
    if (m < 1 || n < 1 || sigma < 0 || sigma >= m)
        throw std::invalid_argument("hex_torus: bad parameters");
    auto nid = [&](int i, int j, int p) {
        int wrap = (j >= 0 ? j / n : -((-j + n - 1) / n));
        j -= wrap * n;
        i -= wrap * sigma;
        return (j * m + imod(i, m)) * 2 + p;
    };
    std::set<std::pair<int, int>> es;
    try {
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i) {
                int a = nid(i, j, 0);
                add_edge_checked(es, a, nid(i, j, 1), "hex_torus");
                add_edge_checked(es, a, nid(i - 1, j, 1), "hex_torus");
                add_edge_checked(es, a, nid(i, j - 1, 1), "hex_torus");
            }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("hex_torus: degenerate quotient");
    }
    HexQuotient out;
    out.tiles = m * n;
    out.g = Graph(2 * m * n, {es.begin(), es.end()},
                  "hex(" + std::to_string(m) + "," + std::to_string(n) + "," +
                      std::to_string(sigma) + ")");
    if (out.g.regular_degree() != std::optional<int>(3))
        throw std::invalid_argument("hex_torus: degenerate quotient");
    auto og = girth(out.g);
    if (!allow_small && (!og || *og < 6))
        throw std::invalid_argument("hex_torus: quotient girth below 6 (pass allow_small to accept)");
    // period of direction (dx,dy): least k > 0 with k*(dx,dy) in the lattice
    // spanned by (m,0) and (sigma,n)
    auto order_of = [&](int dx, int dy) {
        for (int k = 1;; ++k) {
            long long x = 1LL * k * dx, y = 1LL * k * dy;
            if (y % n != 0) continue;
            long long b = y / n;
            if ((x - b * sigma) % m == 0) return k;
        }
    };
    out.periods = {order_of(1, 0), order_of(0, 1), order_of(1, -1)};
    return out;
}

Graph hex_klein(int m, int n) {
    // As hex_torus but the vertical identification reflects the horizontal
    // coordinate (orientation-reversing seam).
    if (m < 2 || n < 2) throw std::invalid_argument("hex_klein: bad parameters");
    auto nid = [&](int i, int j, int p) {
        while (j >= n) {
            j -= n;
            i = -i;
        }
        while (j < 0) {
            j += n;
            i = -i;
        }
        return (j * m + imod(i, m)) * 2 + p;
    };
    std::set<std::pair<int, int>> es;
    try {
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i) {
                int a = nid(i, j, 0);
                add_edge_checked(es, a, nid(i, j, 1), "hex_klein");
                add_edge_checked(es, a, nid(i - 1, j, 1), "hex_klein");
                add_edge_checked(es, a, nid(i, j - 1, 1), "hex_klein");
            }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("hex_klein: degenerate quotient");
    }
    Graph g(2 * m * n, {es.begin(), es.end()},
            "hexK(" + std::to_string(m) + "," + std::to_string(n) + ")");
    if (g.regular_degree() != std::optional<int>(3))
        throw std::invalid_argument("hex_klein: degenerate quotient");
    return g;
}

}  // namespace tf
