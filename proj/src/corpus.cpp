#include "indcomp/corpus.hpp"

#include <numeric>
#include <stdexcept>

namespace indcomp {

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) edges.emplace_back(i, j);
    return Graph::from_edge_list(vs, edges);
}

}  // namespace

void for_each_graph_on(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 0 || n > 8) throw std::invalid_argument("exhaustive corpus limited to 0..8 vertices");
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) fn(graph_from_mask(n, mask));
}

std::vector<Graph> all_graphs_on(int n) {
    std::vector<Graph> out;
    for_each_graph_on(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

Graph random_graph(SplitMix64& rng, int n, std::uint64_t num, std::uint64_t den) {
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(num, den)) edges.emplace_back(i, j);
    return Graph::from_edge_list(vs, edges);
}

Graph random_tree(SplitMix64& rng, int n) {
    if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    if (n == 1) return Graph::from_edge_list(vs, {});
    if (n == 2) return Graph::from_edge_list(vs, {{0, 1}});
    std::vector<int> pruefer(n - 2);
    for (int& p : pruefer) p = static_cast<int>(rng.below(n));
    std::vector<int> degree(n, 1);
    for (int p : pruefer) ++degree[p];
    std::vector<std::pair<int, int>> edges;
    for (int p : pruefer) {
        for (int leaf = 0; leaf < n; ++leaf)
            if (degree[leaf] == 1) {
                edges.emplace_back(std::min(leaf, p), std::max(leaf, p));
                --degree[leaf];
                --degree[p];
                break;
            }
    }
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) {
            if (u < 0)
                u = v;
            else
                edges.emplace_back(u, v);
        }
    return Graph::from_edge_list(vs, edges);
}

Graph random_forest(SplitMix64& rng, int v_max) {
    if (v_max < 1) throw std::invalid_argument("forest needs room for a vertex");
    std::vector<int> vs;
    std::vector<std::pair<int, int>> edges;
    int offset = 0, remaining = v_max;
    while (remaining > 0) {
        int size = 1 + static_cast<int>(rng.below(remaining));
        Graph tree = random_tree(rng, size);
        for (int v : tree.vertices()) vs.push_back(v + offset);
        for (auto [u, v] : tree.edges()) edges.emplace_back(u + offset, v + offset);
        offset += size;
        remaining -= size;
    }
    return Graph::from_edge_list(vs, edges);
}

Graph random_claw_free(SplitMix64& rng, int n, std::uint64_t num, std::uint64_t den) {
    Graph g = random_graph(rng, n, num, den);
    while (auto claw = find_claw(g)) {
        auto [c, a, b, d] = *claw;
        int leaves[3] = {a, b, d};
        int i = static_cast<int>(rng.below(3));
        int j = (i + 1 + static_cast<int>(rng.below(2))) % 3;
        g.add_edge(leaves[i], leaves[j]);
    }
    return g;
}

SimplicialComplex random_complex(SplitMix64& rng, int max_vertices, std::size_t max_faces) {
    for (;;) {
        const int n = 1 + static_cast<int>(rng.below(max_vertices));
        const std::size_t facet_count = 1 + rng.below(3);
        std::vector<std::vector<int>> facets;
        for (std::size_t f = 0; f < facet_count; ++f) {
            std::uint64_t mask = 1 + rng.below((1ULL << n) - 1);
            std::vector<int> facet;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) facet.push_back(v);
            facets.push_back(std::move(facet));
        }
        SimplicialComplex k = SimplicialComplex::from_facets(facets);
        if (k.face_count() <= max_faces) return k;
    }
}

}  // namespace indcomp
