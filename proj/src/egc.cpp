#include "egc.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "families.hpp"

namespace tf {

std::vector<std::string> verify_egc(const Graph& g, const EdgeColoring& c,
                                    int kappa) {
    if (c.size() != g.edges.size())
        throw std::invalid_argument("verify_egc: coloring domain mismatch");
    std::vector<std::string> bad;
    std::vector<unsigned> used(g.n, 0);
    for (size_t e = 0; e < c.size(); ++e) {
        if (c[e] < 1 || c[e] > kappa) {
            bad.push_back("edge " + std::to_string(e) + " color out of range");
            continue;
        }
        unsigned bit = 1u << c[e];
        auto [u, v] = g.edges[e];
        if (used[u] & bit)
            bad.push_back("not proper at vertex " + std::to_string(u));
        if (used[v] & bit)
            bad.push_back("not proper at vertex " + std::to_string(v));
        used[u] |= bit;
        used[v] |= bit;
    }
    auto gc = enumerate_girth_cycles(g);
    for (const auto& cyc : gc.cycles) {
        unsigned seen = 0;
        const int L = static_cast<int>(cyc.size());
        for (int k = 0; k < L; ++k)
            seen |= 1u << c[g.edge_index(cyc[k], cyc[(k + 1) % L])];
        if (__builtin_popcount(seen) != kappa) {
            std::ostringstream os;
            os << "cycle";
            for (int v : cyc) os << ' ' << v;
            os << " not rainbow";
            bad.push_back(os.str());
        }
    }
    return bad;
}

namespace {

struct EgcSearch {
    int m = 0, kappa = 0;
    unsigned FULL = 0;
    std::vector<std::vector<int>> groups;  // all-different groups (edge ids)
    std::vector<int> order;                // branching order
    long long nodes = 0;
    std::chrono::steady_clock::time_point deadline;
    bool timed_out = false;

    bool propagate(std::vector<unsigned>& dom, std::vector<unsigned>& asg) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int e = 0; e < m; ++e)
                if (asg[e] == 0 && dom[e] && (dom[e] & (dom[e] - 1)) == 0) {
                    asg[e] = dom[e];
                    changed = true;
                }
            for (const auto& grp : groups) {
                unsigned used = 0;
                for (int e : grp)
                    if (asg[e]) {
                        if (used & asg[e]) return false;
                        used |= asg[e];
                    }
                for (int e : grp)
                    if (!asg[e]) {
                        unsigned nd = dom[e] & ~used;
                        if (nd == 0) return false;
                        if (nd != dom[e]) {
                            dom[e] = nd;
                            changed = true;
                        }
                    }
                unsigned avail = 0;
                for (int e : grp) avail |= asg[e] ? asg[e] : dom[e];
                if (avail != FULL) return false;
                for (int c = 0; c < kappa; ++c) {
                    unsigned bit = 1u << c;
                    if (used & bit) continue;
                    int slot = -1, cnt = 0;
                    for (int e : grp)
                        if (!asg[e] && (dom[e] & bit)) {
                            slot = e;
                            if (++cnt > 1) break;
                        }
                    if (cnt == 1 && dom[slot] != bit) {
                        dom[slot] = bit;
                        changed = true;
                    }
                }
            }
        }
        return true;
    }

    // returns assignment bitmasks, or empty on exhaustion/timeout
    std::vector<unsigned> search(std::vector<unsigned> dom,
                                 std::vector<unsigned> asg) {
        ++nodes;
        if ((nodes & 255) == 0 && std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return {};
        }
        if (!propagate(dom, asg)) return {};
        int e = -1;
        for (int x : order)
            if (!asg[x]) {
                e = x;
                break;
            }
        if (e < 0) return asg;
        unsigned d = dom[e];
        for (unsigned c = 1; c <= d; c <<= 1) {
            if (!(d & c)) continue;
            auto nd = dom;
            auto na = asg;
            nd[e] = c;
            na[e] = c;
            auto r = search(std::move(nd), std::move(na));
            if (!r.empty() || timed_out) return r;
        }
        return {};
    }
};

}  // namespace

EgcVerdict find_egc(const Graph& g, double timeout_s) {
    auto t0 = std::chrono::steady_clock::now();
    EgcVerdict v;
    auto finish = [&](EgcVerdict& vv) -> EgcVerdict& {
        vv.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        return vv;
    };
    auto deg = g.regular_degree();
    auto og = girth(g);
    if (!deg || !og || *deg != *og) {
        v.status = EgcStatus::Impossible;
        v.certificate = "not girth-tight: degree and girth differ";
        return finish(v);
    }
    const int kappa = *deg;
    if (kappa > 1 && g.n % 2 == 1) {
        v.status = EgcStatus::Impossible;
        v.certificate = "odd order: no 1-factorization exists (Class 2)";
        return finish(v);
    }
    auto gc = enumerate_girth_cycles(g);
    const int m = static_cast<int>(g.edges.size());

    EgcSearch s;
    s.m = m;
    s.kappa = kappa;
    s.FULL = (1u << kappa) - 1;
    for (int u = 0; u < g.n; ++u) {
        std::vector<int> grp;
        for (int w : g.adj[u]) grp.push_back(g.edge_index(u, w));
        std::sort(grp.begin(), grp.end());
        s.groups.push_back(std::move(grp));
    }
    std::vector<int> ccount(m, 0);
    for (const auto& cyc : gc.cycles) {
        std::vector<int> grp;
        const int L = static_cast<int>(cyc.size());
        for (int k = 0; k < L; ++k) {
            int e = g.edge_index(cyc[k], cyc[(k + 1) % L]);
            grp.push_back(e);
            ++ccount[e];
        }
        if (static_cast<int>(grp.size()) == kappa) {
            std::sort(grp.begin(), grp.end());
            s.groups.push_back(std::move(grp));
        }
    }
    s.order.resize(m);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return ccount[a] > ccount[b]; });
    // symmetry breaking: fix the palette at the vertex of least cycle load
    int loadv = 0;
    long long bestload = -1;
    for (int u = 0; u < g.n; ++u) {
        long long load = 0;
        for (int w : g.adj[u]) load += ccount[g.edge_index(u, w)];
        if (bestload < 0 || load < bestload) {
            bestload = load;
            loadv = u;
        }
    }
    std::vector<unsigned> dom(m, s.FULL), asg(m, 0);
    {
        std::vector<int> pre;
        for (int w : g.adj[loadv]) pre.push_back(g.edge_index(loadv, w));
        std::sort(pre.begin(), pre.end());
        for (size_t i = 0; i < pre.size(); ++i) dom[pre[i]] = 1u << i;
    }
    s.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(timeout_s));
    auto r = s.search(std::move(dom), std::move(asg));
    v.nodes = s.nodes;
    if (s.timed_out) {
        v.status = EgcStatus::Timeout;
        v.certificate = "timeout";
        return finish(v);
    }
    if (r.empty()) {
        v.status = EgcStatus::Impossible;
        v.certificate = "search exhausted";
        if (*og == 4) {
            if (auto ob = find_k23_obstruction(g)) {
                std::ostringstream os;
                os << "K_{2,3} obstruction on vertices";
                for (int x : *ob) os << ' ' << x;
                v.certificate = os.str();
            }
        }
        return finish(v);
    }
    v.status = EgcStatus::Colored;
    v.coloring.resize(m);
    for (int e = 0; e < m; ++e)
        v.coloring[e] = 32 - __builtin_clz(r[e]);  // bit position, 1-based
    return finish(v);
}

std::optional<std::vector<int>> find_k23_obstruction(const Graph& g) {
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (g.has_edge(a, b)) continue;
            std::vector<int> common;
            std::set_intersection(g.adj[a].begin(), g.adj[a].end(),
                                  g.adj[b].begin(), g.adj[b].end(),
                                  std::back_inserter(common));
            if (common.size() >= 3)
                return std::vector<int>{a, b, common[0], common[1], common[2]};
        }
    return std::nullopt;
}

namespace {

bool color_multigraph_3(const Multigraph& m, std::vector<int>& out,
                        double timeout_s, bool& timed_out) {
    const int E = static_cast<int>(m.edges.size());
    std::vector<unsigned> used(m.n, 0);
    out.assign(E, 0);
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(timeout_s));
    long long nodes = 0;
    timed_out = false;
    // plain backtracking over the edge list in order
    std::vector<int> stack_c(E + 1, 0);
    int k = 0;
    while (true) {
        if (k == E) return true;
        if ((++nodes & 4095) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return false;
        }
        auto [u, v] = m.edges[k];
        int c = stack_c[k] + 1;
        bool placed = false;
        for (; c <= 3; ++c) {
            unsigned bit = 1u << c;
            if ((used[u] | used[v]) & bit) continue;
            used[u] |= bit;
            used[v] |= bit;
            out[k] = c;
            stack_c[k] = c;
            placed = true;
            break;
        }
        if (placed) {
            ++k;
            stack_c[k] = 0;
        } else {
            stack_c[k] = 0;
            if (k == 0) return false;
            --k;
            unsigned bit = 1u << out[k];
            used[m.edges[k].first] &= ~bit;
            used[m.edges[k].second] &= ~bit;
        }
    }
}

}  // namespace

TriBool is_generalized_snark(const Multigraph& m, double timeout_s) {
    std::vector<int> deg(m.n, 0);
    for (auto [u, v] : m.edges) {
        ++deg[u];
        ++deg[v];
    }
    for (int d : deg)
        if (d != 3) throw std::invalid_argument("is_generalized_snark: not cubic");
    std::vector<int> col;
    bool to = false;
    bool ok = color_multigraph_3(m, col, timeout_s, to);
    if (to) return TriBool::Unknown;
    return ok ? TriBool::False : TriBool::True;
}

EgcVerdict egc_120(const Graph& g, double timeout_s) {
    auto t0 = std::chrono::steady_clock::now();
    auto inv = nabla_inverse(g);
    if (!inv) return find_egc(g, timeout_s);
    EgcVerdict v;
    std::vector<int> col3;
    bool to = false;
    bool ok = color_multigraph_3(inv->base, col3, timeout_s, to);
    v.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
    if (to) {
        v.status = EgcStatus::Timeout;
        v.certificate = "timeout in 3-edge-coloring of contracted multigraph";
        return v;
    }
    if (!ok) {
        v.status = EgcStatus::Impossible;
        v.certificate = "contracted cubic multigraph is a generalized snark";
        return v;
    }
    // Lift: each non-triangle edge keeps its multigraph color; each triangle
    // edge takes the color of the non-triangle edge at the opposite corner.
    v.status = EgcStatus::Colored;
    v.coloring.assign(g.edges.size(), 0);
    const auto& corners = inv->corners;  // per base vertex, 3 graph vertices
    for (size_t k = 0; k < inv->base.edges.size(); ++k) {
        int a = inv->graph_edge[k];
        v.coloring[a] = col3[k];
    }
    std::vector<int> pendant_color(g.n, 0);  // color of the non-triangle edge
    for (size_t k = 0; k < inv->base.edges.size(); ++k) {
        auto [u, v2] = g.edges[inv->graph_edge[k]];
        pendant_color[u] = col3[k];
        pendant_color[v2] = col3[k];
    }
    for (const auto& tri : corners)
        for (int i = 0; i < 3; ++i) {
            int a = tri[i], b = tri[(i + 1) % 3], opp = tri[(i + 2) % 3];
            v.coloring[g.edge_index(a, b)] = pendant_color[opp];
        }
    auto bad = verify_egc(g, v.coloring, 3);
    if (!bad.empty()) {
        v.status = EgcStatus::Impossible;
        v.certificate = "internal error: lifted coloring failed verification";
        v.coloring.clear();
    }
    return v;
}

Graph girth_cycle_incidence_graph(const Graph& g) {
    auto gc = enumerate_girth_cycles(g);
    const int m = static_cast<int>(g.edges.size());
    std::vector<std::pair<int, int>> es;
    for (size_t ci = 0; ci < gc.cycles.size(); ++ci) {
        const auto& cyc = gc.cycles[ci];
        const int L = static_cast<int>(cyc.size());
        for (int k = 0; k < L; ++k)
            es.emplace_back(g.edge_index(cyc[k], cyc[(k + 1) % L]),
                            m + static_cast<int>(ci));
    }
    return Graph(m + static_cast<int>(gc.cycles.size()), std::move(es),
                 "GA(" + g.name + ")");
}

}  // namespace tf
