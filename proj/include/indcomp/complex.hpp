#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "indcomp/graph.hpp"

namespace indcomp {

// Non-empty face, stored as a strictly increasing vertex list.
class Simplex {
public:
    explicit Simplex(std::vector<int> vertices);

    const std::vector<int>& vertices() const { return vertices_; }
    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }

    bool contains(int v) const;
    bool contains(const Simplex& other) const;
    bool intersects(const Simplex& other) const;

    // Total order by vertex sequence; prefixes sort first.
    auto operator<=>(const Simplex& other) const { return vertices_ <=> other.vertices_; }
    bool operator==(const Simplex& other) const = default;

private:
    std::vector<int> vertices_;
};

// Finite abstract simplicial complex given by its facets.  The ground set
// always contains every facet vertex and may be strictly larger when set
// explicitly (Alexander duality needs the ambient vertex set).  The complex
// with no facets is the empty complex: dimension -1, reduced homology Z in
// degree -1.  Facets are kept inclusion-maximal and lex sorted.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_facets(const std::vector<std::vector<int>>& facets,
                                         std::optional<std::vector<int>> ground = std::nullopt);

    const std::vector<int>& ground() const { return ground_; }
    const std::vector<Simplex>& facets() const { return facets_; }

    int dim() const;
    bool empty() const { return facets_.empty(); }

    bool contains(const Simplex& s) const;

    // Every face, grouped by dimension (index 0 holds vertices).  Faces within
    // a dimension are lex sorted.
    std::vector<std::vector<Simplex>> faces_by_dim() const;
    std::vector<Simplex> all_faces() const;
    std::size_t face_count() const;
    std::vector<std::size_t> f_vector() const;

    // Vertices that appear in some facet, in increasing order.
    std::vector<int> participating_vertices() const;

    bool operator==(const SimplicialComplex& other) const;

private:
    std::vector<int> ground_;
    std::vector<Simplex> facets_;
};

// Facets are the maximal independent sets; ground is V(G).
SimplicialComplex independence_complex(const Graph& g);

// Flag complex of G, computed as the independence complex of the complement.
SimplicialComplex clique_complex(const Graph& g);

// Is K the clique complex of its own 1-skeleton?
bool is_clique(const SimplicialComplex& k);

Graph one_skeleton(const SimplicialComplex& k);

// Faces tau with tau union sigma in K; sigma must be a face of K.
SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma);

// Union of the vertex stars of sigma: faces tau with tau union {v} in K for
// some v in sigma.
SimplicialComplex star_cluster(const SimplicialComplex& k, const Simplex& sigma);

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

// Join of complexes on disjoint ground sets.  When grounds collide, the right
// factor is relabeled to fresh labels and the mapping is reported.
struct JoinResult {
    SimplicialComplex complex;
    std::map<int, int> relabeled;  // old right-factor label -> new label
};
JoinResult join(const SimplicialComplex& a, const SimplicialComplex& b);

// Cone and suspension with fresh apex labels above the ground maximum.
SimplicialComplex cone(const SimplicialComplex& k);
SimplicialComplex simplicial_suspension(const SimplicialComplex& k);

// Combinatorial Alexander dual on the explicit ground set: faces are the
// proper non-empty subsets S with ground minus S not a face of K.  K must not
// be the full simplex on its ground set.
SimplicialComplex alexander_dual(const SimplicialComplex& k);

// Order complex of the face poset.  Vertices are the faces of K numbered in
// lex order; the label map decodes them.
struct BarycentricResult {
    SimplicialComplex complex;
    std::vector<Simplex> face_of;  // label -> face of K
};
BarycentricResult barycentric_subdivision(const SimplicialComplex& k);

// Graph on the faces of K joining pairs where neither contains the other.
struct IncomparabilityResult {
    Graph graph;
    std::vector<Simplex> face_of;  // label -> face of K
};
IncomparabilityResult incomparability_graph(const SimplicialComplex& k);

// For a non-isolated vertex v of G whose neighborhood is independent:
// cluster = SC(N(v)) inside I_G, intersection = st(v) cap cluster.  The
// suspension of the intersection matches I_G up to homotopy; callers verify
// that homologically.
struct VertexSplit {
    SimplicialComplex intersection;
    SimplicialComplex cluster;
};
VertexSplit star_split(const Graph& g, int v);

// Finite poset from cover relations; relations are closed transitively and
// checked for cycles.
class Poset {
public:
    Poset(std::vector<int> elements, const std::vector<std::pair<int, int>>& covers);

    const std::vector<int>& elements() const { return elements_; }
    bool less(int a, int b) const;
    bool comparable(int a, int b) const;

private:
    std::vector<int> elements_;
    std::set<std::pair<int, int>> less_;
};

// Chains of P; facets are the maximal chains.
SimplicialComplex order_complex(const Poset& p);

// Smallest chain (by size, then lex) meeting every maximal chain, if any.
// Such a chain makes the order complex a star cluster inside itself, hence
// contractible.
std::optional<std::vector<int>> chain_hitting_all_maximal_chains(const Poset& p);

// Independence complex of the line graph; vertices are edge labels of G in
// lex order.  G must have at least one edge.
struct MatchingComplexResult {
    SimplicialComplex complex;
    std::map<int, std::pair<int, int>> edge_of;
};
MatchingComplexResult matching_complex(const Graph& g);

}  // namespace indcomp
