#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace tf {

enum class EgcStatus { Colored, Impossible, Timeout };

struct EgcVerdict {
    EgcStatus status = EgcStatus::Impossible;
    EdgeColoring coloring;     // valid when Colored
    std::string certificate;   // reason / obstruction description otherwise
    long long nodes = 0;
    long long millis = 0;
};

// Empty list = valid edge-girth coloring: proper and every girth cycle
// rainbow. Otherwise one message per violation.
std::vector<std::string> verify_egc(const Graph& g, const EdgeColoring& c,
                                    int kappa);

// Exact decision: complete backtracking over edge colors with all-different
// propagation on vertex stars and girth cycles. Deterministic.
EgcVerdict find_egc(const Graph& g, double timeout_s = 300.0);

// K_{2,3} (equivalently theta_2) subgraph in a girth-4 graph: two
// nonadjacent vertices with three common neighbors. Returns {a,b,x,y,z}.
std::optional<std::vector<int>> find_k23_obstruction(const Graph& g);
inline std::optional<std::vector<int>> find_theta_obstruction(const Graph& g) {
    return find_k23_obstruction(g);
}

enum class TriBool { False, True, Unknown };

// Cubic multigraph chromatic index > 3?
TriBool is_generalized_snark(const Multigraph& m, double timeout_s = 60.0);

// Decide egc for a cubic graph of signature (1,1,0) through triangle
// contraction and the 3-edge-colorability of the contracted multigraph;
// falls back to find_egc when the graph is not triangle-replaced.
EgcVerdict egc_120(const Graph& g, double timeout_s = 60.0);

// Bipartite incidence graph: vertices 0..m-1 are the edges of g, vertices
// m..m+k-1 its girth cycles; adjacency is membership.
Graph girth_cycle_incidence_graph(const Graph& g);

}  // namespace tf
