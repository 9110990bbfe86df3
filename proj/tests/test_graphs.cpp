#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "indcomp/corpus.hpp"
#include "indcomp/graph.hpp"

using namespace indcomp;

namespace {

Graph make_cycle(int n) {
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph::from_edge_list(vs, es);
}

Graph make_path(int n) {
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edge_list(vs, es);
}

Graph make_complete(int n) {
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edge_list(vs, es);
}

}  // namespace

TEST_CASE("edge list validation") {
    CHECK_THROWS_AS(Graph::from_edge_list({0, 1}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list({0, 1}, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list({0, 0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list({-1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list({0, 1}, {{0, 1}, {1, 0}}), std::invalid_argument);

    Graph g = Graph::from_edge_list({3, 1, 7}, {{7, 1}});
    CHECK(g.vertices() == std::vector<int>{1, 3, 7});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 7}});
    CHECK(g.degree(3) == 0);
    CHECK(g.fresh_label() == 8);
}

TEST_CASE("mutation keeps the edge count consistent") {
    Graph g = make_cycle(4);
    g.remove_vertex(0);
    CHECK(g.edge_count() == 2);
    CHECK(g.vertices() == std::vector<int>{1, 2, 3});
    g.add_vertex(9);
    g.add_edge(9, 2);
    CHECK(g.edge_count() == 3);
    CHECK_THROWS_AS(g.add_edge(9, 2), std::invalid_argument);
    g.remove_edge(9, 2);
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(g.remove_edge(9, 2), std::invalid_argument);
}

TEST_CASE("complement of the pentagon is a pentagon") {
    Graph c5 = make_cycle(5);
    Graph co = complement(c5);
    CHECK(co.edge_count() == 5);
    CHECK(is_isomorphic(co, c5));
    CHECK(complement(co) == c5);
}

TEST_CASE("line graph labels follow lex edge order") {
    // Path 0-1-2-3: edges (0,1),(1,2),(2,3) become a path of three vertices.
    auto lg = line_graph(make_path(4));
    CHECK(lg.graph.vertices() == std::vector<int>{0, 1, 2});
    CHECK(lg.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(lg.edge_of.at(0) == std::pair<int, int>{0, 1});
    CHECK(lg.edge_of.at(2) == std::pair<int, int>{2, 3});

    // The claw and the triangle share K_3 as line graph.
    Graph claw = Graph::from_edge_list({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(is_isomorphic(line_graph(claw).graph, make_complete(3)));
    CHECK(is_isomorphic(line_graph(make_complete(3)).graph, make_complete(3)));
}

TEST_CASE("line graphs are claw-free") {
    for (int n = 2; n <= 6; ++n)
        for_each_graph_on(n, [](const Graph& g) {
            if (g.edge_count() == 0) return;
            CHECK(is_claw_free(line_graph(g).graph));
        });
}

TEST_CASE("claw detection") {
    Graph claw = Graph::from_edge_list({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
    auto found = find_claw(claw);
    REQUIRE(found.has_value());
    CHECK(*found == std::array<int, 4>{0, 1, 2, 3});
    CHECK_FALSE(is_claw_free(claw));
    CHECK(is_claw_free(make_cycle(6)));
    CHECK(has_induced_subgraph(claw, claw));
    CHECK_FALSE(has_induced_subgraph(make_complete(4), claw));
}

TEST_CASE("triangle freeness and triangle-free vertices") {
    CHECK(is_triangle_free(make_cycle(5)));
    CHECK_FALSE(is_triangle_free(make_complete(3)));
    CHECK(vertex_in_no_triangle(make_cycle(5)) == 0);
    CHECK_FALSE(vertex_in_no_triangle(make_complete(3)).has_value());
    // Pendant vertex next to a triangle qualifies, the triangle does not.
    Graph g = Graph::from_edge_list({0, 1, 2, 3}, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(vertex_in_no_triangle(g) == 3);
}

TEST_CASE("distances and diameter") {
    Graph p4 = make_path(4);
    auto d = distance_matrix(p4);
    CHECK(d[0][3] == 3);
    CHECK(d[1][2] == 1);
    CHECK(distance(p4, 0, 3) == 3);
    CHECK(diameter(make_cycle(6)) == 3);
    CHECK(diameter(make_cycle(9)) == 4);

    Graph split = Graph::from_edge_list({0, 1, 2, 3}, {{0, 1}, {2, 3}});
    CHECK(distance(split, 0, 3) == kUnreachable);
    CHECK_FALSE(is_connected(split));
    CHECK_THROWS_AS(diameter(split), std::invalid_argument);
    CHECK_THROWS_AS(diameter(Graph{}), std::invalid_argument);
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(make_cycle(4)));
    CHECK_FALSE(is_bipartite(make_cycle(5)));
    CHECK(is_bipartite(Graph::from_edge_list({0, 1, 2}, {})));
}

TEST_CASE("maximal independent sets of small graphs") {
    CHECK(maximal_independent_sets(make_cycle(5)) ==
          std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
    CHECK(maximal_independent_sets(make_complete(3)) ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(maximal_independent_sets(Graph{}).empty());
    CHECK(maximal_independent_sets(Graph::from_edge_list({0, 1}, {})) ==
          std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("maximal independent sets are independent, maximal, and exhaustive") {
    for_each_graph_on(5, [](const Graph& g) {
        auto sets = maximal_independent_sets(g);
        std::set<std::vector<int>> seen(sets.begin(), sets.end());
        CHECK(seen.size() == sets.size());
        for (const auto& s : sets) {
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    CHECK_FALSE(g.has_edge(s[i], s[j]));
            for (int v : g.vertices()) {
                if (std::binary_search(s.begin(), s.end(), v)) continue;
                bool extends = true;
                for (int w : s)
                    if (g.has_edge(v, w)) {
                        extends = false;
                        break;
                    }
                CHECK_FALSE(extends);
            }
        }
    });
}

TEST_CASE("chromatic numbers of reference graphs") {
    CHECK(chromatic_number(make_cycle(5)) == 3);
    CHECK(chromatic_number(make_cycle(6)) == 2);
    CHECK(chromatic_number(make_complete(4)) == 4);
    CHECK(chromatic_number(Graph::from_edge_list({0, 1, 2}, {})) == 1);
    CHECK(chromatic_number(Graph{}) == 0);
    CHECK_THROWS_AS(chromatic_number(make_complete(7), 6), std::invalid_argument);
}

TEST_CASE("colorings are proper partitions of minimum size") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, 7, 1, 2);
        auto classes = chromatic_coloring(g);
        CHECK(static_cast<int>(classes.size()) == chromatic_number(g));
        std::set<int> covered;
        for (const auto& cls : classes)
            for (std::size_t i = 0; i < cls.size(); ++i) {
                covered.insert(cls[i]);
                for (std::size_t j = i + 1; j < cls.size(); ++j)
                    CHECK_FALSE(g.has_edge(cls[i], cls[j]));
            }
        CHECK(covered.size() == g.vertex_count());
    }
}

TEST_CASE("subgraph and isomorphism checks") {
    Graph c5 = make_cycle(5);
    CHECK(is_subgraph(make_path(3), c5));
    CHECK_FALSE(is_subgraph(make_complete(3), c5));
    CHECK(is_isomorphic(Graph::from_edge_list({4, 5, 6}, {{4, 5}, {5, 6}}), make_path(3)));
    CHECK_FALSE(is_isomorphic(make_path(5), c5));
    CHECK(is_isomorphic(Graph{}, Graph{}));
}

TEST_CASE("induced subgraph keeps interior edges only") {
    Graph g = induced_subgraph(make_cycle(5), {0, 1, 2});
    CHECK(g.vertices() == std::vector<int>{0, 1, 2});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(induced_subgraph(g, {9}), std::invalid_argument);
}

TEST_CASE("random trees are trees and forests are acyclic") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng.below(10));
        Graph t = random_tree(rng, n);
        CHECK(t.vertex_count() == static_cast<std::size_t>(n));
        CHECK(t.edge_count() == static_cast<std::size_t>(n - 1));
        CHECK(is_connected(t));
        Graph f = random_forest(rng, 9);
        // Acyclic: every component has one edge fewer than its vertices.
        std::size_t components = 0;
        std::set<int> seen;
        for (int v : f.vertices()) {
            if (seen.count(v)) continue;
            ++components;
            std::vector<int> stack{v};
            seen.insert(v);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int w : f.neighbors(x))
                    if (seen.insert(w).second) stack.push_back(w);
            }
        }
        CHECK(f.vertex_count() - components == f.edge_count());
    }
}

TEST_CASE("random claw-free repair yields claw-free graphs") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 40; ++trial)
        CHECK(is_claw_free(random_claw_free(rng, 8, 1, 3)));
}
