#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace tf {

enum class Surface { Torus, KleinBottle };

struct CutoutSpec {
    Surface surface = Surface::Torus;
    int r = 0, t = 0, s = 0;
};

// Partition of the edge set of a 4-regular graph into cycles, optionally
// 2-classed so every vertex lies on one Red and one Green cycle.
struct CycleDecomposition {
    Graph base;
    std::vector<std::vector<int>> cycles;  // vertex sequences
    std::vector<int> cls;                  // 0 = Red, 1 = Green; may be empty
};

// Arc labels in {1,2,3}; label[e] = {label at edges[e].first, at .second}.
struct NeighborhoodLabeling {
    std::vector<std::array<int, 2>> label;
    bool symmetric = false;  // label[e][0]==label[e][1] everywhere
};

struct NablaInverseResult {
    Multigraph base;
    NeighborhoodLabeling rho;
    std::vector<std::array<int, 3>> corners;  // graph vertices per base vertex
    std::vector<int> graph_edge;              // non-triangle edge per base edge
};

Graph torus44(int r, int t, int s);
Graph klein44(int r, int t);

// Cutout graph together with its grid geometry: every edge oriented from
// its left (horizontal) or lower (non-horizontal) endpoint.
struct CutoutGeometry {
    Graph g;
    struct GEdge {
        int a, b;         // a = left / lower endpoint
        bool horizontal;
    };
    std::vector<GEdge> gedges;
};
CutoutGeometry cutout_geometry(const CutoutSpec& spec);
Graph circulant(int n, int i, int j);
Graph wreath(int n);
Graph subdivided_double(const Graph& g);

NeighborhoodLabeling default_labeling(const Multigraph& m);
Graph nabla(const Multigraph& m);
Graph nabla(const Multigraph& m, const NeighborhoodLabeling& rho);
std::optional<NablaInverseResult> nabla_inverse(const Graph& g);

Graph prism(const Graph& g);

CycleDecomposition wreath_decomposition(int n);
Graph partial_line_graph(const CycleDecomposition& cd);

// Decomposition-aware partial line graph: also reports, for each PLG vertex
// pair forming an edge, the shared base vertex and which side is the red /
// green base edge, oriented along a fixed traversal of each cycle. Needed by
// the a,b,c,d coloring.
struct PlgResult {
    Graph g;  // the partial line graph
    // for PLG edge k: base vertex, red base-edge id, green base-edge id,
    // head flags (1 if the oriented cycle enters the base vertex there)
    struct EdgeInfo {
        int base_vertex, red_edge, green_edge, red_head, green_head;
    };
    std::vector<EdgeInfo> info;
};
PlgResult partial_line_graph_info(const CycleDecomposition& cd);

CycleDecomposition barrel(int k, int n, int r);
CycleDecomposition mutant_barrel(int k, int n, int r);
// factors: 2-regular spanning subgraphs of K_n given as cycle lists;
// sequence: which factor each of the ell copies uses.
CycleDecomposition generalized_barrel(
    int n, const std::vector<std::vector<std::vector<int>>>& factors,
    const std::vector<int>& sequence, bool mutant);

Graph petersen_barrel(int k);
Graph dod_barrel(int k);
Graph ti_barrel(int k);

// Row step (1, 3 or 5) per base vertex of the Petersen / truncated
// icosahedron towers; adjacent rows always get distinct steps.
std::vector<int> petersen_tower_steps();
std::vector<int> ti_tower_steps();

// The frozen order in which the long cycle of dod_barrel(1) visits the
// 140 vertices: (base vertex 0..19, copy 0..6) per position.
const std::vector<std::array<int, 2>>& dod_barrel_sequence();

// Colors of the 140 long-cycle edges of dod_barrel; entry t colors the
// edge leaving sequence position t, identical in every repetition.
const std::vector<int>& dod_barrel_cycle_colors();

struct HexQuotient {
    Graph g;
    int tiles = 0;
    std::array<int, 3> periods{};  // orders of the three edge-normal
                                   // translation directions in the quotient
};
HexQuotient hex_torus(int m, int n, int sigma = 0, bool allow_small = false);
Graph hex_klein(int m, int n);

Graph named(const std::string& name);
std::vector<std::string> named_catalog();

Multigraph named_multigraph(const std::string& name);  // "theta", ...

// The 2-factorization tables used by the generalized-barrel examples.
std::vector<std::vector<std::vector<int>>> table_f7(int variant);  // 0,1,2
std::vector<std::vector<std::vector<int>>> table_f9();
std::vector<std::vector<std::vector<int>>> table_f8();

}  // namespace tf
