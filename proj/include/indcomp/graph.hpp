#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace indcomp {

// Finite simple graph with arbitrary non-negative integer labels.
// Vertices are kept sorted; adjacency is symmetric and loop-free.
class Graph {
public:
    Graph() = default;

    // Validates and canonicalizes an edge list.  Throws std::invalid_argument on
    // negative labels, duplicate vertices, loops, duplicate edges, or edges over
    // undeclared vertices.  Isolated vertices survive via the vertex list.
    static Graph from_edge_list(const std::vector<int>& vertices,
                                const std::vector<std::pair<int, int>>& edges);

    const std::vector<int>& vertices() const { return vertices_; }
    std::vector<std::pair<int, int>> edges() const;

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool has_vertex(int v) const { return adjacency_.count(v) != 0; }
    bool has_edge(int u, int v) const;

    // Neighbor set of a declared vertex; throws on unknown labels.
    const std::set<int>& neighbors(int v) const;

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;

    // Smallest unused label, used by constructions that add fresh vertices.
    int fresh_label() const { return vertices_.empty() ? 0 : vertices_.back() + 1; }

    void add_vertex(int v);
    void add_edge(int u, int v);
    void remove_vertex(int v);
    void remove_edge(int u, int v);

    bool operator==(const Graph& other) const;

private:
    std::vector<int> vertices_;
    std::map<int, std::set<int>> adjacency_;
    std::size_t edge_count_ = 0;
};

// Graph plus a note per fresh vertex describing what it encodes.
struct GraphBuildResult {
    Graph graph;
    std::map<int, std::string> provenance;
};

Graph complement(const Graph& g);

// Vertices are the edges of g in lex order of their sorted endpoint pairs;
// the returned map decodes each label back to its endpoint pair.
struct LineGraphResult {
    Graph graph;
    std::map<int, std::pair<int, int>> edge_of;
};
LineGraphResult line_graph(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::set<int>& keep);

// A claw is a vertex with three pairwise non-adjacent neighbors; returns
// (center, a, b, c) for the lex-smallest one.
std::optional<std::array<int, 4>> find_claw(const Graph& g);
bool is_claw_free(const Graph& g);

bool is_triangle_free(const Graph& g);
// Smallest-label vertex whose neighborhood is independent, if any.
std::optional<int> vertex_in_no_triangle(const Graph& g);

// Hop distances indexed by vertex order; kUnreachable marks disconnected pairs.
inline constexpr int kUnreachable = -1;
std::vector<std::vector<int>> distance_matrix(const Graph& g);
int distance(const Graph& g, int u, int v);

// Throws unless g is non-empty and connected.
int diameter(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// All inclusion-maximal independent sets, each sorted, listed in lex order.
// The graph with no vertices yields an empty list.
std::vector<std::vector<int>> maximal_independent_sets(const Graph& g);

// Exact chromatic number by branch and bound; rejects instances with more
// than `cap` vertices.  The coloring variant returns color classes ordered by
// smallest member.
int chromatic_number(const Graph& g, std::size_t cap = 20);
std::vector<std::vector<int>> chromatic_coloring(const Graph& g, std::size_t cap = 20);

// True when sub's vertices and edges all appear in g.
bool is_subgraph(const Graph& sub, const Graph& g);

// Brute-force isomorphism test, intended for small graphs only.
bool is_isomorphic(const Graph& a, const Graph& b);

// Does g contain an induced copy of pattern?
bool has_induced_subgraph(const Graph& g, const Graph& pattern);

}  // namespace indcomp
