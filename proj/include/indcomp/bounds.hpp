#pragma once

#include <string>
#include <vector>

#include "indcomp/complex.hpp"
#include "indcomp/graph.hpp"
#include "indcomp/homology.hpp"

namespace indcomp {

// Quotient rounded toward negative infinity, matching the bracket notation
// on negative arguments.
long floor_div(long a, long b);

// Lower bounds for the homological connectivity of I_G.  Each op validates
// its hypothesis and throws std::invalid_argument with a witness otherwise.

// floor((dim I_G - 2) / 2); G must be claw-free.
long clawfree_bound(const Graph& g);

// True iff every independent set with at most r vertices extends to some
// vertex of sigma (tau union {v} stays independent); sigma must be
// independent.  When true, I_G is (r-1)-connected.
bool extension_hypothesis(const Graph& g, const Simplex& sigma, int r);

// #S - 2 for S with pairwise distance >= 3 (unreachable pairs qualify).
long distance3_bound(const Graph& g, const std::vector<int>& s);

// floor(diameter / 3) - 1; G must be connected and non-empty.
long diameter_bound(const Graph& g);

// floor(dim I_G / m) - 1 with m the maximum degree; G must have an edge.
long maxdeg_bound(const Graph& g);

// floor((2n - 1) / (3m + 2)) - 1 on n vertices with maximum degree m; G must
// be claw-free.
long engstrom_clawfree_bound(const Graph& g);

// Cover of I_G by st(v) plus the star clusters of the color classes of the
// subgraph induced by N(v).  Its size witnesses a category bound of
// chi(N(v)).  The chromatic cap guards the exact coloring solver.
std::vector<SimplicialComplex> catloc_cover(const Graph& g, int v, std::size_t cap = 20);

// Star clusters of the color classes of an optimal coloring of G; a cover of
// I_G by chi(G) pieces.
std::vector<SimplicialComplex> chromatic_cover(const Graph& g, std::size_t cap = 20);

// Checks that the pieces cover the whole complex exactly and that each piece
// looks contractible (point homology, greedy-collapsible to a point).
struct CoverCheck {
    bool union_matches = false;
    bool pieces_point_homology = false;
    bool pieces_collapse = false;
    bool ok() const { return union_matches && pieces_point_homology && pieces_collapse; }
};
CoverCheck check_cover(const std::vector<SimplicialComplex>& pieces,
                       const SimplicialComplex& whole);

// A claimed bound together with the homological evidence backing it.
struct BoundReport {
    std::string bound_name;
    std::string inputs;
    long claimed = 0;
    std::string evidence;
    bool ok = false;
};

BoundReport report_clawfree(const Graph& g);
BoundReport report_extension(const Graph& g, const Simplex& sigma, int r);
BoundReport report_distance3(const Graph& g, const std::vector<int>& s);
BoundReport report_diameter(const Graph& g);
BoundReport report_maxdeg(const Graph& g);
BoundReport report_engstrom(const Graph& g);
BoundReport report_catloc(const Graph& g, int v, std::size_t cap = 20);
BoundReport report_chromatic(const Graph& g, std::size_t cap = 20);

}  // namespace indcomp
