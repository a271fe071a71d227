#pragma once

#include <string>

#include "families.hpp"
#include "graph.hpp"

namespace tf {

// Constructive colorings. A result is either a coloring or NotApplicable
// with the violated condition spelled out; every applicable coloring is
// expected to verify as an edge-girth coloring.
struct ColoringResult {
    bool applicable = false;
    EdgeColoring coloring;
    std::string reason;  // filled when not applicable
};

// Zigzag 2-factorization coloring of a torus / Klein-bottle cutout:
// partitions the edges into two 2-factors made of staircase cycles, colors
// one factor with {1,2} and the other with {3,4}, then fixes the per-cycle
// color swap so every quadrangle is rainbow. Returns the geometry used so
// callers can report the cycle structure.
struct ZigzagResult {
    ColoringResult result;
    CutoutGeometry geom;
    std::vector<std::vector<int>> factor_cycles[2];  // staircase vertex cycles
};
ZigzagResult zigzag_coloring(const CutoutSpec& spec);

// The three 1-factorization colorings of the 4-cube: f0 by coordinate
// direction, f1 and f2 pulled back from two orthogonal Latin squares of
// order 4 through the antipodal projection onto K_{4,4}.
struct Q4Colorings {
    Graph q4;
    EdgeColoring f0, f1, f2;
};
Q4Colorings q4_mols_colorings();

// Coloring of the partial line graph of the doubled n-cycle under its
// quadrangle decomposition; n > 4.
struct PlgColoring {
    PlgResult plg;
    EdgeColoring coloring;
};
PlgColoring wreath_plg_coloring(int n);

// The a,b,c,d pattern coloring of the partial line graph of a (generalized)
// barrel; requires red/green classes on the decomposition.
EdgeColoring barrel_abcd_coloring(const PlgResult& plg);

// Orbit-generated 5-coloring of the Armanios-Wells graph. literal=true uses
// the uniform color-per-row reading of the source table (which does not
// verify); the default applies the corrected row colors.
EdgeColoring aw_orbit_coloring(bool literal = false);

enum class Tower { Pet, Dod, TI };
EdgeColoring barrel_tower_coloring(Tower which, int k);

}  // namespace tf
