#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "indcomp/complex.hpp"
#include "indcomp/corpus.hpp"

using namespace indcomp;

namespace {

Graph make_cycle(int n) {
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph::from_edge_list(vs, es);
}

std::vector<std::vector<int>> facet_lists(const SimplicialComplex& k) {
    std::vector<std::vector<int>> out;
    for (const auto& f : k.facets()) out.push_back(f.vertices());
    return out;
}

const std::vector<std::vector<int>> kHollowTriangle{{0, 1}, {0, 2}, {1, 2}};

}  // namespace

TEST_CASE("simplex canonicalization") {
    CHECK(Simplex({3, 1, 2}).vertices() == std::vector<int>{1, 2, 3});
    CHECK(Simplex({5}).dim() == 0);
    CHECK_THROWS_AS(Simplex({}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex({-2}), std::invalid_argument);
    CHECK(Simplex({1, 2, 3}).contains(Simplex({1, 3})));
    CHECK_FALSE(Simplex({1, 2}).contains(Simplex({3})));
    CHECK(Simplex({1, 2}).intersects(Simplex({2, 3})));
    CHECK_FALSE(Simplex({1, 2}).intersects(Simplex({3, 4})));
}

TEST_CASE("facet canonicalization and ground sets") {
    auto k = SimplicialComplex::from_facets({{1, 0}, {0}, {0, 1}, {2}});
    CHECK(facet_lists(k) == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK(k.ground() == std::vector<int>{0, 1, 2});
    CHECK(k.dim() == 1);

    auto with_ground = SimplicialComplex::from_facets({{0}}, std::vector<int>{0, 1});
    CHECK(with_ground.ground() == std::vector<int>{0, 1});
    CHECK(with_ground.participating_vertices() == std::vector<int>{0});
    CHECK_THROWS_AS(SimplicialComplex::from_facets({{0, 1}}, std::vector<int>{0}),
                    std::invalid_argument);

    SimplicialComplex empty;
    CHECK(empty.empty());
    CHECK(empty.dim() == -1);
    CHECK(empty.face_count() == 0);
}

TEST_CASE("face enumeration") {
    auto k = SimplicialComplex::from_facets({{0, 1, 2}});
    CHECK(k.f_vector() == std::vector<std::size_t>{3, 3, 1});
    CHECK(k.face_count() == 7);
    auto faces = k.faces_by_dim();
    CHECK(faces[1] == std::vector<Simplex>{Simplex({0, 1}), Simplex({0, 2}), Simplex({1, 2})});
    CHECK(k.contains(Simplex({0, 2})));
    CHECK_FALSE(k.contains(Simplex({3})));
}

TEST_CASE("independence complex of the pentagon") {
    auto k = independence_complex(make_cycle(5));
    CHECK(facet_lists(k) ==
          std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
    CHECK(k.ground() == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(k.f_vector() == std::vector<std::size_t>{5, 5});
}

TEST_CASE("independence complexes are exactly the clique complexes") {
    auto k3 = clique_complex(make_cycle(3));
    CHECK(facet_lists(k3) == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(is_clique(k3));
    CHECK_FALSE(is_clique(SimplicialComplex::from_facets(kHollowTriangle)));
    for_each_graph_on(5, [](const Graph& g) {
        CHECK(is_clique(independence_complex(g)));
    });
}

TEST_CASE("star and star cluster in the pentagon complex") {
    auto k = independence_complex(make_cycle(5));
    CHECK(facet_lists(star(k, Simplex({0}))) ==
          std::vector<std::vector<int>>{{0, 2}, {0, 3}});
    // SC({0,2}) adds every facet touching 0 or 2.
    CHECK(facet_lists(star_cluster(k, Simplex({0, 2}))) ==
          std::vector<std::vector<int>>{{0, 2}, {0, 3}, {2, 4}});
    CHECK_THROWS_AS(star(k, Simplex({0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(star_cluster(k, Simplex({0, 1})), std::invalid_argument);
}

TEST_CASE("star cluster equals the union of vertex stars") {
    SplitMix64 rng(23);
    for_each_graph_on(4, [&](const Graph& g) {
        auto k = independence_complex(g);
        if (k.empty()) return;
        auto faces = k.all_faces();
        for (int pick = 0; pick < 3; ++pick) {
            const Simplex& sigma = faces[rng.below(faces.size())];
            SimplicialComplex stars;
            for (int v : sigma.vertices())
                stars = complex_union(stars, star(k, Simplex({v})));
            CHECK(star_cluster(k, sigma) == stars);
        }
    });
}

TEST_CASE("union and intersection") {
    auto a = SimplicialComplex::from_facets({{0, 1}, {1, 2}});
    auto b = SimplicialComplex::from_facets({{1, 2}, {2, 3}});
    CHECK(facet_lists(complex_union(a, b)) ==
          std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(facet_lists(complex_intersection(a, b)) ==
          std::vector<std::vector<int>>{{1, 2}});
    auto disjoint = complex_intersection(SimplicialComplex::from_facets({{0}}),
                                         SimplicialComplex::from_facets({{1}}));
    CHECK(disjoint.empty());
}

TEST_CASE("join, cone, and suspension") {
    auto s0 = SimplicialComplex::from_facets({{0}, {1}});
    auto other = SimplicialComplex::from_facets({{2}, {3}});
    auto square = join(s0, other);
    CHECK(square.relabeled.empty());
    CHECK(facet_lists(square.complex) ==
          std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});

    auto clashed = join(s0, s0);
    CHECK(clashed.relabeled == std::map<int, int>{{0, 2}, {1, 3}});
    CHECK(facet_lists(clashed.complex) ==
          std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});

    // The empty complex is the join unit.
    auto hollow = SimplicialComplex::from_facets(kHollowTriangle);
    CHECK(join(SimplicialComplex{}, hollow).complex == hollow);
    CHECK(join(hollow, SimplicialComplex{}).complex == hollow);

    CHECK(facet_lists(cone(hollow)) ==
          std::vector<std::vector<int>>{{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    auto sus = simplicial_suspension(hollow);
    CHECK(sus.facets().size() == 6);
    CHECK(sus.ground() == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("independence complex of a disjoint union is the join") {
    Graph g = Graph::from_edge_list({0, 1, 2, 3}, {{0, 1}, {2, 3}});
    auto joined = join(independence_complex(Graph::from_edge_list({0, 1}, {{0, 1}})),
                       independence_complex(Graph::from_edge_list({2, 3}, {{2, 3}})));
    CHECK(independence_complex(g) == joined.complex);
}

TEST_CASE("Alexander dual") {
    auto s0 = SimplicialComplex::from_facets({{0}, {1}});
    CHECK(alexander_dual(s0).empty());
    CHECK(alexander_dual(s0).ground() == std::vector<int>{0, 1});

    auto hollow = SimplicialComplex::from_facets(kHollowTriangle);
    CHECK(alexander_dual(hollow).empty());

    auto three_points = SimplicialComplex::from_facets({{0}, {1}, {2}});
    CHECK(facet_lists(alexander_dual(three_points)) ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});

    auto padded = SimplicialComplex::from_facets({{0}}, std::vector<int>{0, 1});
    CHECK(facet_lists(alexander_dual(padded)) == std::vector<std::vector<int>>{{0}});

    CHECK_THROWS_AS(alexander_dual(SimplicialComplex::from_facets({{0, 1, 2}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(alexander_dual(SimplicialComplex{}), std::invalid_argument);
}

TEST_CASE("Alexander dual is an involution") {
    SplitMix64 rng(31);
    int checked = 0;
    while (checked < 25) {
        auto k = random_complex(rng, 5, 12);
        if (k.ground().size() == k.facets().front().size()) continue;  // full simplex
        CHECK(alexander_dual(alexander_dual(k)) == k);
        ++checked;
    }
}

TEST_CASE("barycentric subdivision of an edge is a two-edge path") {
    auto bary = barycentric_subdivision(SimplicialComplex::from_facets({{0, 1}}));
    // Labels follow lex face order: {0} -> 0, {0,1} -> 1, {1} -> 2.
    CHECK(bary.face_of == std::vector<Simplex>{Simplex({0}), Simplex({0, 1}), Simplex({1})});
    CHECK(facet_lists(bary.complex) == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
}

TEST_CASE("barycentric subdivision equals the independence complex of incomparability") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        auto k = random_complex(rng, 4, 10);
        auto bary = barycentric_subdivision(k);
        auto incomp = incomparability_graph(k);
        CHECK(bary.face_of == incomp.face_of);
        CHECK(bary.complex == independence_complex(incomp.graph));
    }
}

TEST_CASE("vertex star split in the hexagon") {
    auto split = star_split(make_cycle(6), 0);
    CHECK(facet_lists(split.cluster) ==
          std::vector<std::vector<int>>{{1, 3, 5}, {1, 4}, {2, 5}});
    CHECK(facet_lists(split.intersection) ==
          std::vector<std::vector<int>>{{2}, {3}, {4}});
}

TEST_CASE("vertex star split rejects bad vertices") {
    CHECK_THROWS_AS(star_split(make_cycle(5), 7), std::invalid_argument);
    CHECK_THROWS_AS(star_split(Graph::from_edge_list({0, 1, 2}, {{0, 1}}), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(star_split(make_cycle(3), 0), std::invalid_argument);
}

TEST_CASE("poset closure and order complex") {
    Poset diamond({0, 1, 2, 3}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(diamond.less(0, 3));
    CHECK_FALSE(diamond.less(3, 0));
    CHECK_FALSE(diamond.comparable(1, 2));
    CHECK(facet_lists(order_complex(diamond)) ==
          std::vector<std::vector<int>>{{0, 1, 3}, {0, 2, 3}});
    CHECK(chain_hitting_all_maximal_chains(diamond) == std::vector<int>{0});

    Poset antichain({1, 2}, {});
    CHECK_FALSE(chain_hitting_all_maximal_chains(antichain).has_value());
    CHECK_FALSE(chain_hitting_all_maximal_chains(Poset({}, {})).has_value());

    CHECK_THROWS_AS(Poset({0, 1}, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Poset({0}, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("matching complex decodes line-graph labels") {
    Graph p4 = Graph::from_edge_list({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
    auto m = matching_complex(p4);
    CHECK(facet_lists(m.complex) == std::vector<std::vector<int>>{{0, 2}, {1}});
    CHECK(m.edge_of.at(1) == std::pair<int, int>{1, 2});
    CHECK_THROWS_AS(matching_complex(Graph::from_edge_list({0, 1}, {})),
                    std::invalid_argument);
}
