#pragma once

#include <array>
#include <string>
#include <vector>

#include "families.hpp"
#include "graph.hpp"

namespace tf {

// Cycle counts of the three 2-factor unions (12), (13), (14) of a proper
// 4-edge-coloring; each factor's cycles have equal length when the star
// notation applies.
struct StarTriple {
    int a = 0, b = 0, c = 0;
    bool operator==(const StarTriple&) const = default;
};

struct StarReport {
    bool applicable = false;
    std::string reason;
    StarTriple triple;
    // full cycle-length multisets for the unions (12), (13), (14)
    std::array<std::vector<int>, 3> lengths;
    std::array<bool, 3> equal_lengths{true, true, true};
};

// gcd formula for toroidal cutouts: (gcd(r,|t-s|)/2, gcd(r,s), gcd(r,t+s)/2).
StarReport star_by_formula(const CutoutSpec& spec);

// direct cycle count of the unions (12), (13), (14) under a proper
// 4-edge-coloring
StarReport star_by_oracle(const Graph& g, const EdgeColoring& c);

struct StarSweepRow {
    int r = 0, t = 0, s = 0;
    bool formula_ok = false, oracle_ok = false;
    StarTriple formula, oracle;
    bool agree = false;
    std::string note;
};

// evaluate formula vs oracle on a list of cutout parameters
std::vector<StarSweepRow> star_sweep(const std::vector<CutoutSpec>& specs);

// All distinct 1-factorizations of a cubic graph, one representative per
// color-permutation class (colors fixed in adjacency order at vertex 0).
std::vector<EdgeColoring> one_factorizations(const Graph& g);

// all color pairs whose union is a single Hamilton cycle
std::vector<std::pair<int, int>> hamiltonian_pairs(const Graph& g,
                                                   const EdgeColoring& c,
                                                   int kappa);

// Reference cell values transcribed from the published cycle-count tables,
// as printed: triples over the digits 1-9 and a=10, ..., f=15.
struct PublishedStarCell {
    int r, t, s;
    StarTriple value;
};
const std::vector<PublishedStarCell>& published_table_cells();      // t in {5,...,15}
const std::vector<PublishedStarCell>& published_display_cells();    // t = 2

}  // namespace tf
