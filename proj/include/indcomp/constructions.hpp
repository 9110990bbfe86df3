#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "indcomp/complex.hpp"
#include "indcomp/graph.hpp"

namespace indcomp {

// Binary relation between two non-empty label sets; pairs must lie in X x Y.
struct Relation {
    std::vector<int> xs, ys;
    std::set<std::pair<int, int>> pairs;

    static Relation create(std::vector<int> xs, std::vector<int> ys,
                           std::set<std::pair<int, int>> pairs);
};

// Bipartite graph on the vertices of K and its maximal simplices (fresh
// labels, lex order), joining v to sigma when v lies outside sigma.  The
// independence complex of the result has the homology of K shifted up one
// degree.  Rejects complexes without maximal simplices.
GraphBuildResult jonsson_graph(const SimplicialComplex& k);

// Every edge (a,b) becomes a path a-x-b through a fresh vertex.  The
// independence complex of the result has the homology of the Alexander dual
// of I_G shifted up one degree.  Rejects graphs without edges.
GraphBuildResult csorba_full_subdivision(const Graph& g);

// Replaces e by a path of length four (three fresh vertices); suspends the
// independence complex, shifting homology up one degree.
GraphBuildResult subdivide_edge_four(const Graph& g, std::pair<int, int> e);

// (K_X, K_Y): faces of K_X are the subsets of X related to a common y, and
// symmetrically.  Both complexes have identical reduced homology.
std::pair<SimplicialComplex, SimplicialComplex> dowker_pair(const Relation& r);

// Suspension of G over a subgraph H: a fresh vertex v plus one fresh vertex
// per maximal independent set M of H, with v-v_M edges, v_M joined to the
// H-vertices outside M, and the edges of H removed.  The independence
// complex of the result is a suspension of I_G.  When H has no vertices the
// single maximal independent set is empty, so the result is G plus a
// disjoint edge.
GraphBuildResult graph_suspension(const Graph& g, const Graph& h);

// graph_suspension over the subgraph formed by two disjoint edges; adds
// exactly five vertices.
GraphBuildResult crossing_resolution(const Graph& g, std::pair<int, int> e1,
                                     std::pair<int, int> e2);

// Repeatedly suspends over a two-edge star at the smallest vertex of degree
// above three (two smallest neighbors) until max degree <= 3.  `shifts`
// counts the suspensions, so the result's homology is the input's shifted up
// by `shifts` degrees.
struct Degree3Result {
    Graph graph;
    int shifts = 0;
    std::map<int, std::string> provenance;
};
Degree3Result degree3_reduction(const Graph& g);

// True iff the vertices of s are pairwise at distance >= 3 and every choice
// of one neighbor per member contains an adjacent pair; then I_G is
// contractible.  A member with no neighbors makes the transversal condition
// vacuous (and I_G a cone).
bool contractibility_criterion(const Graph& g, const std::vector<int>& s);

}  // namespace indcomp
