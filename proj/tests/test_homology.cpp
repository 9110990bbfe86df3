#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "indcomp/corpus.hpp"
#include "indcomp/homology.hpp"

using namespace indcomp;

namespace {

IntegerMatrix dense(std::vector<std::vector<long>> rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (rows[i][j] != 0) m.set(i, j, rows[i][j]);
    return m;
}

std::vector<BigInt> big(std::vector<long> values) {
    return std::vector<BigInt>(values.begin(), values.end());
}

Graph make_cycle(int n) {
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph::from_edge_list(vs, es);
}

// Minimal triangulation of the projective plane: the antipodal quotient of
// the icosahedron.  Every edge lies in exactly two of the ten triangles.
const std::vector<std::vector<int>> kProjectivePlane{
    {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
    {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};

IntegerMatrix random_matrix(SplitMix64& rng, std::size_t max_dim, long span) {
    IntegerMatrix m(1 + rng.below(max_dim), 1 + rng.below(max_dim));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.set(i, j, rng.range(-span, span));
    return m;
}

}  // namespace

TEST_CASE("matrix storage and multiplication") {
    IntegerMatrix m(2, 3);
    m.set(0, 0, 4);
    m.set(0, 0, 0);  // clearing drops the entry
    CHECK(m.entries().empty());
    CHECK(m.get(1, 2) == 0);
    CHECK_THROWS_AS(m.set(2, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(m.get(0, 3), std::out_of_range);

    auto a = dense({{1, 2}, {3, 4}}, 2);
    auto swap = dense({{0, 1}, {1, 0}}, 2);
    CHECK(a.multiply(swap) == dense({{2, 1}, {4, 3}}, 2));
    CHECK(a.multiply(IntegerMatrix::identity(2)) == a);
    CHECK_THROWS_AS(a.multiply(IntegerMatrix(3, 1)), std::invalid_argument);
}

TEST_CASE("Smith normal form on pinned matrices") {
    CHECK(smith_normal_form(dense({{2, 4}, {6, 8}}, 2)).diagonal == big({2, 4}));
    CHECK(smith_normal_form(dense({{2, 0}, {0, 3}}, 2)).diagonal == big({1, 6}));
    CHECK(smith_normal_form(dense({{4, 0}, {0, 6}}, 2)).diagonal == big({2, 12}));
    CHECK(smith_normal_form(dense({{6, 4}, {4, 4}}, 2)).diagonal == big({2, 4}));
    CHECK(smith_normal_form(dense({{0, 1}, {1, 0}}, 2)).diagonal == big({1, 1}));
    CHECK(smith_normal_form(dense({{-5}}, 1)).diagonal == big({5}));
    CHECK(smith_normal_form(IntegerMatrix(3, 4)).rank == 0);
    CHECK(smith_normal_form(IntegerMatrix(0, 5)).diagonal.empty());
    CHECK(smith_normal_form(IntegerMatrix::identity(3)).diagonal == big({1, 1, 1}));
}

TEST_CASE("reference reducer agrees with the production reducer") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        auto m = random_matrix(rng, 6, 9);
        auto fast = smith_normal_form(m);
        auto naive = smith_normal_form_reference(m);
        CHECK(fast.diagonal == naive.diagonal);
        CHECK(fast.rank == naive.rank);
    }
}

TEST_CASE("divisibility chain holds") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        auto d = smith_normal_form(random_matrix(rng, 7, 30)).diagonal;
        for (std::size_t i = 1; i < d.size(); ++i) {
            CHECK(d[i - 1] > 0);
            CHECK(d[i] % d[i - 1] == 0);
        }
    }
}

TEST_CASE("entries beyond 64 bits") {
    const BigInt huge = BigInt(1) << 40;
    IntegerMatrix m(2, 2);
    m.set(0, 0, huge);
    m.set(1, 1, 3 * huge);
    auto result = smith_normal_form(m);
    CHECK(result.diagonal == std::vector<BigInt>{huge, 3 * huge});

    // A unit pivot whose elimination overflows 64-bit arithmetic.
    const BigInt big_entry = BigInt(1) << 62;
    IntegerMatrix n(2, 2);
    n.set(0, 0, 1);
    n.set(0, 1, big_entry);
    n.set(1, 0, big_entry);
    auto escalated = smith_normal_form(n);
    CHECK(escalated.diagonal == std::vector<BigInt>{1, big_entry * big_entry});
    CHECK(escalated.diagonal == smith_normal_form_reference(n).diagonal);
}

TEST_CASE("witness transforms reproduce the diagonal") {
    SplitMix64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_matrix(rng, 5, 9);
        auto plain = smith_normal_form(m);
        auto witnessed = smith_normal_form(m, true);
        CHECK(witnessed.diagonal == plain.diagonal);
        REQUIRE(witnessed.row_ops.has_value());
        REQUIRE(witnessed.col_ops.has_value());
        // Unimodularity: a square integer matrix with all invariant factors 1.
        auto u = smith_normal_form(*witnessed.row_ops);
        auto v = smith_normal_form(*witnessed.col_ops);
        CHECK(u.rank == m.rows());
        CHECK(v.rank == m.cols());
        CHECK(std::all_of(u.diagonal.begin(), u.diagonal.end(),
                          [](const BigInt& d) { return d == 1; }));
        CHECK(std::all_of(v.diagonal.begin(), v.diagonal.end(),
                          [](const BigInt& d) { return d == 1; }));
    }
}

TEST_CASE("boundary matrices of the full triangle") {
    auto k = SimplicialComplex::from_facets({{0, 1, 2}});
    auto d2 = boundary_matrix(k, 2);
    CHECK(d2.rows() == 3);
    CHECK(d2.cols() == 1);
    // Rows in lex edge order {0,1},{0,2},{1,2}.
    CHECK(d2.get(0, 0) == 1);
    CHECK(d2.get(1, 0) == -1);
    CHECK(d2.get(2, 0) == 1);

    auto d0 = boundary_matrix(k, 0);
    CHECK(d0.rows() == 1);
    CHECK(d0.cols() == 3);
    CHECK(d0.get(0, 1) == 1);

    CHECK(boundary_matrix(k, -1).rows() == 0);
    CHECK(boundary_matrix(k, 3).cols() == 0);
    CHECK_THROWS_AS(boundary_matrix(k, 4), std::invalid_argument);
    CHECK_THROWS_AS(boundary_matrix(k, -2), std::invalid_argument);
}

TEST_CASE("composite boundaries vanish") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 15; ++trial) {
        auto k = random_complex(rng, 5, 40);
        for (int d = 0; d <= k.dim() + 1; ++d) {
            auto lower = boundary_matrix(k, d - 1);
            auto upper = boundary_matrix(k, d);
            CHECK(lower.multiply(upper).entries().empty());
        }
    }
}

TEST_CASE("homology of pinned complexes") {
    CHECK(reduced_homology(SimplicialComplex{}).group(-1) ==
          HomologyGroup{1, {}});
    CHECK(reduced_homology(SimplicialComplex::from_facets({{0}})).is_point());
    CHECK(reduced_homology(SimplicialComplex::from_facets({{0, 1, 2, 3, 4, 5}})).is_point());
    CHECK(reduced_homology(SimplicialComplex::from_facets({{0}, {1}})).group(0) ==
          HomologyGroup{1, {}});

    auto hollow = reduced_homology(SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}}));
    CHECK(hollow.single_sphere_dim() == 1);

    // Boundary of the tetrahedron is a 2-sphere.
    auto sphere = reduced_homology(
        SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
    CHECK(sphere.single_sphere_dim() == 2);
    CHECK(sphere.wedge_of_spheres() == std::pair<int, long>{2, 1});

    // Two hollow triangles glued at a vertex.
    auto wedge = reduced_homology(
        SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(wedge.group(1) == HomologyGroup{2, {}});
    CHECK(wedge.wedge_of_spheres() == std::pair<int, long>{1, 2});
    CHECK_FALSE(wedge.single_sphere_dim().has_value());
}

TEST_CASE("homology of independence complexes of small cycles") {
    CHECK(reduced_homology(independence_complex(make_cycle(4))).group(0) ==
          HomologyGroup{1, {}});
    CHECK(reduced_homology(independence_complex(make_cycle(5))).single_sphere_dim() == 1);
    auto hexagon = reduced_homology(independence_complex(make_cycle(6)));
    CHECK(hexagon.wedge_of_spheres() == std::pair<int, long>{1, 2});
}

TEST_CASE("projective plane has 2-torsion") {
    auto k = SimplicialComplex::from_facets(kProjectivePlane);
    CHECK(k.f_vector() == std::vector<std::size_t>{6, 15, 10});
    auto profile = reduced_homology(k);
    CHECK(profile.nonzero_groups().size() == 1);
    CHECK(profile.group(1) == HomologyGroup{0, {BigInt(2)}});
    CHECK_FALSE(profile.is_point());
    CHECK_FALSE(profile.wedge_of_spheres().has_value());
}

TEST_CASE("profile shifting") {
    auto hexagon = reduced_homology(independence_complex(make_cycle(6)));
    CHECK(hexagon.shifted(1).group(2) == HomologyGroup{2, {}});
    CHECK(hexagon.shifted(1).group(1) == HomologyGroup{});
    CHECK(hexagon.shifted(-1).shifted(1) == hexagon);
}

TEST_CASE("connectivity levels") {
    CHECK(homological_connectivity(SimplicialComplex{}).level == -2);
    CHECK(homological_connectivity(SimplicialComplex::from_facets({{0}})).all);
    CHECK(homological_connectivity(SimplicialComplex::from_facets({{0}})).text() == "all");
    auto sphere = homological_connectivity(
        SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
    CHECK(sphere.level == 1);
    CHECK(sphere.text() == "1");
    CHECK(sphere.at_least(1));
    CHECK_FALSE(sphere.at_least(2));
    CHECK(homological_connectivity(SimplicialComplex::from_facets({{0}, {1}})).level == -1);
}

TEST_CASE("Euler characteristic matches alternating Betti sum") {
    SplitMix64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        auto k = random_complex(rng, 6, 40);
        long faces = 0;
        const auto fv = k.f_vector();
        for (std::size_t d = 0; d < fv.size(); ++d)
            faces += (d % 2 == 0 ? 1 : -1) * static_cast<long>(fv[d]);
        long betti = 0;
        for (const auto& [degree, group] : reduced_homology(k).nonzero_groups())
            betti += (degree % 2 == 0 ? 1 : -1) * group.betti;
        CHECK(faces - 1 == betti);
    }
}

TEST_CASE("dual-route agreement on boundary matrices") {
    SplitMix64 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        auto k = random_complex(rng, 6, 60);
        for (int d = 0; d <= k.dim() + 1; ++d) {
            auto m = boundary_matrix(k, d);
            CHECK(smith_normal_form(m).diagonal == smith_normal_form_reference(m).diagonal);
        }
    }
}
