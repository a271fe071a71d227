#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "families.hpp"

namespace tf {

namespace {

int imod(int a, int m) { return ((a % m) + m) % m; }

Graph check(Graph g, int n, int m, int deg, int gi) {
    if (g.n != n || static_cast<int>(g.edges.size()) != m ||
        g.regular_degree() != std::optional<int>(deg) ||
        girth(g) != std::optional<int>(gi))
        throw std::logic_error(g.name + ": invariant check failed");
    return g;
}

Graph lcf(const std::string& name, int n, const std::vector<int>& shifts) {
    std::set<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        es.emplace(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
        int j = imod(i + shifts[i % shifts.size()], n);
        es.emplace(std::min(i, j), std::max(i, j));
    }
    return Graph(n, {es.begin(), es.end()}, name);
}

Graph complete(int n, const std::string& name) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es), name);
}

Graph hypercube(int d, const std::string& name) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < (1 << d); ++v)
        for (int b = 0; b < d; ++b)
            if (!(v >> b & 1)) es.emplace_back(v, v | (1 << b));
    return Graph(1 << d, std::move(es), name);
}

// Fixed labeling; all frozen coloring tables in this project refer to it.
const std::vector<std::pair<int, int>> kPetersenEdges = {
    {0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 7}, {2, 5}, {2, 8}, {3, 6},
    {3, 9}, {4, 5}, {4, 9}, {5, 6}, {6, 7}, {7, 8}, {8, 9}};

Graph petersen() { return Graph(10, kPetersenEdges, "Petersen"); }

// Antipodal double cover of the Petersen graph: the edges of three disjoint
// 5-cycles' worth of matching stay inside each copy, the rest cross over.
Graph dodecahedron() {
    const std::set<std::pair<int, int>> within = {{4, 5}, {6, 7}, {8, 9}};
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : kPetersenEdges) {
        if (within.count({u, v})) {
            es.emplace_back(u, v);
            es.emplace_back(10 + u, 10 + v);
        } else {
            es.emplace_back(std::min(u, 10 + v), std::max(u, 10 + v));
            es.emplace_back(std::min(v, 10 + u), std::max(v, 10 + u));
        }
    }
    return Graph(20, std::move(es), "Dod");
}

Graph icosahedron() {
    std::vector<std::pair<int, int>> es;
    auto ring = [&](std::vector<int> r) {
        for (size_t k = 0; k < r.size(); ++k) {
            int a = r[k], b = r[(k + 1) % r.size()];
            es.emplace_back(std::min(a, b), std::max(a, b));
        }
    };
    for (int v = 1; v <= 5; ++v) es.emplace_back(0, v);
    for (int v = 6; v <= 10; ++v) es.emplace_back(v, 11);
    ring({1, 2, 3, 4, 5});
    ring({6, 7, 8, 9, 10});
    const int cross[5][2] = {{6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 6}};
    for (int v = 1; v <= 5; ++v) {
        es.emplace_back(v, cross[v - 1][0]);
        es.emplace_back(v, cross[v - 1][1]);
    }
    return Graph(12, std::move(es), "Icosahedron");
}

// Vertex-split of the icosahedron: one new vertex per incident pair (v, u),
// pentagon around each old vertex, plus the split edges.
Graph truncated_icosahedron() {
    Graph ico = icosahedron();
    auto vid = [&](int v, int u) {
        const auto& nb = ico.adj[v];
        int idx = static_cast<int>(std::lower_bound(nb.begin(), nb.end(), u) - nb.begin());
        return 5 * v + idx;
    };
    std::set<std::pair<int, int>> es;
    for (int v = 0; v < 12; ++v)
        for (int u : ico.adj[v]) {
            for (int w : ico.adj[v])
                if (u < w && ico.has_edge(u, w)) {
                    int a = vid(v, u), b = vid(v, w);
                    es.emplace(std::min(a, b), std::max(a, b));
                }
            int a = vid(v, u), b = vid(u, v);
            es.emplace(std::min(a, b), std::max(a, b));
        }
    return Graph(60, {es.begin(), es.end()}, "TI");
}

Graph coxeter() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 7; ++i) {
        auto add = [&](int a, int b) { es.emplace_back(std::min(a, b), std::max(a, b)); };
        add(i, (i + 1) % 7);              // a-ring, step 1
        add(7 + i, 7 + (i + 2) % 7);      // b-ring, step 2
        add(14 + i, 14 + (i + 3) % 7);    // c-ring, step 3
        add(21 + i, i);
        add(21 + i, 7 + i);
        add(21 + i, 14 + i);
    }
    return Graph(28, std::move(es), "Coxeter");
}

Graph heawood_complement() {
    // vertices +j -> j, -j -> 7+j
    std::vector<std::pair<int, int>> es;
    for (int j = 0; j < 7; ++j)
        for (int d : {0, 2, 3, 4})
            es.emplace_back(j, 7 + (j + d) % 7);
    return Graph(14, std::move(es), "H");
}

Graph armanios_wells() {
    // 20 representative edges (block letter, index), closed under adding 2k
    // to both indices mod 8.
    struct Rep {
        int b1, i1, b2, i2;
    };
    const Rep reps[20] = {
        {0, 0, 2, 7}, {0, 1, 2, 2}, {1, 0, 3, 1}, {1, 1, 3, 2},   // red
        {0, 0, 2, 1}, {0, 1, 2, 0}, {1, 0, 1, 3}, {3, 0, 3, 1},   // black
        {0, 0, 3, 6}, {0, 1, 1, 4}, {1, 1, 2, 6}, {2, 1, 3, 3},   // blue
        {0, 0, 1, 3}, {0, 1, 3, 7}, {1, 0, 2, 5}, {2, 0, 3, 2},   // hazel
        {0, 0, 2, 6}, {0, 1, 2, 7}, {1, 0, 1, 5}, {3, 1, 3, 2}};  // green
    std::set<std::pair<int, int>> es;
    for (const Rep& r : reps)
        for (int k = 0; k < 4; ++k) {
            int a = 8 * r.b1 + (r.i1 + 2 * k) % 8;
            int b = 8 * r.b2 + (r.i2 + 2 * k) % 8;
            es.emplace(std::min(a, b), std::max(a, b));
        }
    return Graph(32, {es.begin(), es.end()}, "AW");
}

Graph hoffman_singleton() {
    // pentagons P_h: (h,i)~(h,i+1); pentagrams Q_k: (k,i)~(k,i+2);
    // cross edges P_{h,i} ~ Q_{k,hk+i}.
    auto P = [&](int h, int i) { return 5 * h + imod(i, 5); };
    auto Q = [&](int k, int i) { return 25 + 5 * k + imod(i, 5); };
    std::set<std::pair<int, int>> es;
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i) {
            es.emplace(std::min(P(h, i), P(h, i + 1)), std::max(P(h, i), P(h, i + 1)));
            es.emplace(std::min(Q(h, i), Q(h, i + 2)), std::max(Q(h, i), Q(h, i + 2)));
        }
    for (int h = 0; h < 5; ++h)
        for (int k = 0; k < 5; ++k)
            for (int i = 0; i < 5; ++i) {
                int a = P(h, i), b = Q(k, h * k + i);
                es.emplace(std::min(a, b), std::max(a, b));
            }
    return Graph(50, {es.begin(), es.end()}, "HoSi");
}

// Second subconstituent of Hoffman-Singleton: induce on the 36 vertices at
// distance 2 from both ends of an edge.
Graph sylvester() {
    Graph hs = hoffman_singleton();
    auto [u, v] = hs.edges.front();
    std::vector<int> keep;
    for (int w = 0; w < hs.n; ++w)
        if (w != u && w != v && !hs.has_edge(w, u) && !hs.has_edge(w, v))
            keep.push_back(w);
    std::vector<int> newid(hs.n, -1);
    for (size_t k = 0; k < keep.size(); ++k) newid[keep[k]] = static_cast<int>(k);
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : hs.edges)
        if (newid[a] >= 0 && newid[b] >= 0)
            es.emplace_back(std::min(newid[a], newid[b]), std::max(newid[a], newid[b]));
    return Graph(static_cast<int>(keep.size()), std::move(es), "Sylvester");
}

}  // namespace

Graph named(const std::string& name) {
    if (name == "k4") return check(complete(4, "K4"), 4, 6, 3, 3);
    if (name == "k33") {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < 3; ++u)
            for (int v = 3; v < 6; ++v) es.emplace_back(u, v);
        return check(Graph(6, std::move(es), "K33"), 6, 9, 3, 4);
    }
    if (name == "q3") return check(hypercube(3, "Q3"), 8, 12, 3, 4);
    if (name == "q4") return check(hypercube(4, "Q4"), 16, 32, 4, 4);
    if (name == "petersen") return check(petersen(), 10, 15, 3, 5);
    if (name == "dodecahedron") return check(dodecahedron(), 20, 30, 3, 5);
    if (name == "icosahedron") return check(icosahedron(), 12, 30, 5, 3);
    if (name == "truncated-icosahedron")
        return check(truncated_icosahedron(), 60, 90, 3, 5);
    if (name == "coxeter") return check(coxeter(), 28, 42, 3, 7);
    if (name == "desargues")
        return check(lcf("Desargues", 20, {5, -5, 9, -9}), 20, 30, 3, 6);
    if (name == "nauru" || name == "st4")
        return check(lcf("Nauru", 24, {5, -9, 7, -7, 9, -5}), 24, 36, 3, 6);
    if (name == "dyck") return check(lcf("Dyck", 32, {5, -5, 13, -13}), 32, 48, 3, 6);
    if (name == "pappus")
        return check(lcf("Pappus", 18, {5, 7, -7, 7, -7, -5}), 18, 27, 3, 6);
    if (name == "tutte-8-cage")
        return check(lcf("Tutte8", 30, {-13, -9, 7, -7, 9, 13}), 30, 45, 3, 8);
    if (name == "truncated-octahedron")
        return check(lcf("TrOct", 24, {3, -7, 7, -3}), 24, 36, 3, 4);
    if (name == "folkman")
        return check(subdivided_double(complete(5, "K5")), 20, 40, 4, 4);
    if (name == "heawood-complement")
        return check(heawood_complement(), 14, 28, 4, 4);
    if (name == "armanios-wells") return check(armanios_wells(), 32, 80, 5, 5);
    if (name == "sylvester") return check(sylvester(), 36, 90, 5, 5);
    throw std::invalid_argument("unknown graph name: " + name);
}

std::vector<std::string> named_catalog() {
    return {"k4",
            "k33",
            "q3",
            "q4",
            "petersen",
            "dodecahedron",
            "icosahedron",
            "truncated-icosahedron",
            "coxeter",
            "desargues",
            "nauru",
            "st4",
            "dyck",
            "pappus",
            "tutte-8-cage",
            "truncated-octahedron",
            "folkman",
            "heawood-complement",
            "armanios-wells",
            "sylvester"};
}

Multigraph named_multigraph(const std::string& name) {
    Multigraph m;
    if (name == "theta") {
        m.n = 2;
        m.edges = {{0, 1}, {0, 1}, {0, 1}};
        m.name = "theta";
        return m;
    }
    // "bridged-cycles-k": two (2k+1)-cycles joined by a bridge, every other
    // non-bridge-endpoint cycle edge doubled; a generalized snark.
    const std::string pre = "bridged-cycles-";
    if (name.rfind(pre, 0) == 0) {
        int k = std::stoi(name.substr(pre.size()));
        if (k < 1) throw std::invalid_argument("bridged-cycles: k must be >= 1");
        int L = 2 * k + 1;
        m.n = 2 * L;
        m.name = name;
        for (int side = 0; side < 2; ++side) {
            int off = side * L;
            for (int i = 0; i < L; ++i) m.edges.emplace_back(off + i, off + (i + 1) % L);
            for (int i = 1; i + 1 < L; i += 2) m.edges.emplace_back(off + i, off + i + 1);
        }
        m.edges.emplace_back(0, L);
        return m;
    }
    if (name == "k4" || name == "petersen" || name == "coxeter" ||
        name == "dodecahedron" || name == "q3" || name == "k33") {
        Graph g = named(name);
        m.n = g.n;
        m.edges = g.edges;
        m.name = g.name;
        return m;
    }
    throw std::invalid_argument("unknown multigraph name: " + name);
}

}  // namespace tf
