#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "indcomp/complex.hpp"
#include "indcomp/graph.hpp"

namespace indcomp {

// Standard families on vertices 0..n-1; bipartite parts are labeled 0..n-1
// and n..n+m-1.
Graph cycle(int n);        // n >= 3
Graph path(int n);         // n >= 1
Graph complete(int n);     // n >= 1
Graph complete_bipartite(int n, int m);  // n, m >= 1

// n-subsets of {1..2n+k} in colex order, joined when disjoint.  The stable
// variant keeps the subsets with no two consecutive elements and not both 1
// and 2n+k.
Graph kneser(int n, int k);
Graph stable_kneser(int n, int k);
std::vector<std::vector<int>> kneser_subsets(int n, int k);
std::vector<std::vector<int>> stable_kneser_subsets(int n, int k);

// Unit-distance graphs on lattice regions, labeled 0..N-1 in lex point
// order.  grid_G: -x <= y <= x and x-m <= y <= n-x.  grid_H: -x-1 <= y <= x
// and x-m <= y <= n-1-x.  The tilde variants keep the points with
// y >= -x+k (y >= -x+k-1 for H) or y <= x-3 and relabel compactly, so
// tilde_G(n,m,0) equals grid_G(n,m) and tilde_G(n,m+3,k) equals grid_H(n,m)
// for k > n as labeled graphs (the point sets are translates).
Graph grid_G(int n, int m);
Graph grid_H(int n, int m);
Graph tilde_G(int n, int m, int k);
Graph tilde_H(int n, int m, int k);

// Matching complex of K_n (n >= 2) and of K_{n,m} (n, m >= 1).
SimplicialComplex matching_complete(int n);
SimplicialComplex chessboard(int n, int m);

// Vertices are the pairs (i,j), 1 <= i < j <= n, in lex order; faces are the
// sets with pairwise distinct first and pairwise distinct second
// coordinates.  The decode helper lists the pair behind each label.
SimplicialComplex stirling(int n);  // n >= 2
std::vector<std::pair<int, int>> stirling_pairs(int n);

// k disjoint squares; and a two-edge path plus k-1 disjoint squares (k >= 1).
Graph family_A(int k);
Graph family_B(int k);

// Two n-gons joined through a middle layer: per column i the edges
// (i,a)-(i,b) and (i,b)-(i,c), plus rim edges (i,a)-(i+1,a) and
// (i,c)-(i+1,c) over Z_n.  Odd n >= 3; label of (i,t) is 3i+t with a,b,c =
// 0,1,2.
Graph pentagon_prism(int n);

// Seven-vertex tree: center 0 joined to 1,2,3, each carrying a leaf.  The
// split at 0 has a hollow-triangle intersection, so it witnesses a
// non-clique piece.
Graph graph_W();

// Name plus integer parameters, as accepted on the command line.
struct FamilySpec {
    std::string name;
    std::vector<int> params;
};

// Builds the named family; throws std::invalid_argument on unknown names or
// out-of-domain parameters.
std::variant<Graph, SimplicialComplex> build_family(const FamilySpec& spec);

// The accepted family names in display order.
const std::vector<std::string>& family_names();

}  // namespace indcomp
