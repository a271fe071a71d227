#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tf {

// Simple undirected graph. Vertices are 0..n-1, edges stored sorted with
// u < v so that edge indices (and everything derived from them) are
// deterministic.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::string name;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> es, std::string name = "");

    int edge_index(int u, int v) const;  // -1 if absent
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    // Regular degree, or nullopt if the graph is not regular.
    std::optional<int> regular_degree() const;
    bool connected() const;
};

// Loopless undirected multigraph; the edge id is the index into `edges`.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::string name;
};

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// All cycles of length exactly g(g), each in canonical form (lexicographically
// least rotation over both directions), sorted.
struct GirthCycleSet {
    int g = 0;
    std::vector<std::vector<int>> cycles;
};
GirthCycleSet enumerate_girth_cycles(const Graph& g);

// Per-vertex descending tuple of girth-cycle counts over incident edges.
struct SignatureResult {
    bool regular = false;
    bool girth_regular = false;
    std::vector<int> sig;            // valid when girth_regular
    int witness_a = -1, witness_b = -1;  // differing vertices when not
    std::vector<std::vector<int>> per_vertex;  // descending tuple per vertex
    // number of girth cycles through each edge (by edge index)
    std::vector<int> cycles_per_edge;
};
SignatureResult signature(const Graph& g);

enum class CIClass { Class1, Class2, Unknown };
// Exact: proper kappa-edge-coloring search with palette fixed at vertex 0.
CIClass chromatic_index_class(const Graph& g, double timeout_s = 60.0);

bool is_g_tight(const Graph& g, double timeout_s = 60.0);

// colors[i] in 1..kappa is the color of edges[i].
using EdgeColoring = std::vector<int>;

// Cycle lengths (sorted ascending) of the 2-regular subgraph on colors
// {c1, c2}; requires the coloring to be proper.
std::vector<int> two_factor_cycles(const Graph& g, const EdgeColoring& c,
                                   int c1, int c2);

bool is_proper(const Graph& g, const EdgeColoring& c);

}  // namespace tf
