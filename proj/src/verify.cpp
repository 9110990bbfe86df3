#include "indcomp/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "indcomp/bounds.hpp"
#include "indcomp/collapse.hpp"
#include "indcomp/complex.hpp"
#include "indcomp/constructions.hpp"
#include "indcomp/corpus.hpp"
#include "indcomp/families.hpp"
#include "indcomp/homology.hpp"
#include "indcomp/json_io.hpp"

namespace indcomp {

std::size_t VerificationReport::passed() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

std::size_t VerificationReport::failed() const { return cases.size() - passed(); }

std::vector<CaseResult> run_cases(const std::vector<std::function<CaseResult()>>& jobs,
                                  int threads) {
    std::vector<CaseResult> results(jobs.size());
    if (jobs.empty()) return results;
    std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, jobs.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                try {
                    results[i] = jobs[i]();
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& worker : pool) worker.join();
    if (error) std::rethrow_exception(error);
    return results;
}

namespace {

using nlohmann::json;
using Jobs = std::vector<std::function<CaseResult()>>;

HomologyProfile sphere_profile(int dim, long count) {
    return HomologyProfile({{dim, HomologyGroup{count, {}}}});
}

std::string graph_repro(const Graph& g, const std::string& expected,
                        const std::string& computed) {
    return json{{"graph", graph_to_json(g)}, {"expected", expected}, {"computed", computed}}
        .dump();
}

CaseResult profile_case(std::string params, const Graph& g, const HomologyProfile& expected,
                        const HomologyProfile& computed) {
    CaseResult result;
    result.params = std::move(params);
    result.expected = profile_to_text(expected);
    result.computed = profile_to_text(computed);
    result.pass = expected == computed;
    if (!result.pass) result.repro = graph_repro(g, result.expected, result.computed);
    return result;
}

// Labeled graph on 0..n-1 from an edge mask over the lex-ordered vertex
// pairs; mask order doubles as the exhaustive corpus order.
Graph mask_graph(int n, std::uint64_t mask) {
    std::vector<int> vertices(n);
    std::iota(vertices.begin(), vertices.end(), 0);
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) edges.emplace_back(i, j);
    return Graph::from_edge_list(vertices, edges);
}

int pair_bits(int n) { return n * (n - 1) / 2; }

long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    long value = 1;
    for (int i = 0; i < r; ++i) value = value * (n - i) / (i + 1);
    return value;
}

long degree_excess(const Graph& g) {
    long total = 0;
    for (int v : g.vertices()) total += std::max(0, g.degree(v) - 3);
    return total;
}

}  // namespace

VerificationReport suite_cycles(int n_max, int threads) {
    if (n_max < 3) throw std::invalid_argument("cycle suite needs n_max >= 3");
    Jobs jobs;
    for (int n = 3; n <= n_max; ++n)
        jobs.push_back([n] {
            // n = 3k yields two spheres S^{k-1}, n = 3k +- 1 a single one.
            int k = n % 3 == 0 ? n / 3 : (n % 3 == 1 ? (n - 1) / 3 : (n + 1) / 3);
            long count = n % 3 == 0 ? 2 : 1;
            Graph g = cycle(n);
            return profile_case("n=" + std::to_string(n), g, sphere_profile(k - 1, count),
                                reduced_homology(independence_complex(g)));
        });
    return {"cycles", 0, run_cases(jobs, threads)};
}

VerificationReport suite_forests(int count, int v_max, std::uint64_t seed, int threads) {
    if (count < 0 || v_max < 1)
        throw std::invalid_argument("forest suite needs count >= 0 and v_max >= 1");
    Jobs jobs;
    for (int i = 0; i < count; ++i)
        jobs.push_back([i, v_max, seed] {
            auto rng = case_rng(seed, static_cast<std::uint64_t>(i));
            Graph g = random_forest(rng, v_max);
            auto profile = reduced_homology(independence_complex(g));
            Graph core = strong_core(g);

            bool stable = !dominated_vertex(core).has_value();
            bool point_core = core.vertex_count() == 1;
            bool matching_core = core.vertex_count() >= 2;
            for (int v : core.vertices()) matching_core = matching_core && core.degree(v) == 1;

            // Dominated-vertex deletion preserves the homotopy type, so the
            // core pins the profile: one vertex forces a point, k disjoint
            // edges force the cross-polytope boundary sphere S^{k-1}.
            HomologyProfile expected;
            std::string shape = "core=unexpected";
            if (point_core) shape = "core=point";
            if (matching_core) {
                int k = static_cast<int>(core.edge_count());
                expected = sphere_profile(k - 1, 1);
                shape = "core=" + std::to_string(k) + " disjoint edges";
            }

            CaseResult result;
            result.params = "case=" + std::to_string(i) + " n=" + std::to_string(g.vertex_count());
            result.expected = "stable core; a point or disjoint edges; the profile they force";
            result.computed = shape + (stable ? "" : " with a dominated pair") + "; profile " +
                              profile_to_text(profile);
            result.pass = stable && (point_core || matching_core) && profile == expected;
            if (!result.pass) result.repro = graph_repro(g, result.expected, result.computed);
            return result;
        });
    return {"forests", seed, run_cases(jobs, threads)};
}

VerificationReport suite_kneser(int k_max, int threads) {
    if (k_max < 0) throw std::invalid_argument("kneser suite needs k_max >= 0");
    Jobs jobs;
    for (int k = 0; k <= k_max; ++k)
        jobs.push_back([k] {
            Graph g = kneser(2, k);
            return profile_case("k=" + std::to_string(k), g,
                                sphere_profile(2, binomial(k + 3, 3)),
                                reduced_homology(independence_complex(g)));
        });
    return {"kneser", 0, run_cases(jobs, threads)};
}

VerificationReport suite_grids(int n_max, int m_max, int threads) {
    if (n_max < 0 || m_max < 0) throw std::invalid_argument("grid suite needs non-negative caps");
    Jobs jobs;
    for (char fam : {'G', 'H'})
        for (int n = 0; n <= n_max; ++n)
            for (int m = 0; m <= m_max; ++m)
                jobs.push_back([fam, n, m] {
                    Graph g = fam == 'G' ? grid_G(n, m) : grid_H(n, m);
                    auto profile = reduced_homology(independence_complex(g));
                    CaseResult result;
                    result.params = std::string("grid") + fam + " n=" + std::to_string(n) +
                                    " m=" + std::to_string(m);
                    result.expected = "point or a single sphere";
                    result.computed = profile_to_text(profile);
                    result.pass = profile.is_point() || profile.single_sphere_dim().has_value();
                    if (!result.pass)
                        result.repro = graph_repro(g, result.expected, result.computed);
                    return result;
                });
    // One suspension per +3 in the cut parameter while k < n and m > 0.
    for (char fam : {'G', 'H'})
        for (int n = 1; n <= n_max; ++n)
            for (int m = 1; m <= m_max; ++m)
                for (int k = 0; k < n; ++k)
                    jobs.push_back([fam, n, m, k] {
                        Graph lower = fam == 'G' ? tilde_G(n, m, k) : tilde_H(n, m, k);
                        Graph upper = fam == 'G' ? tilde_G(n, m, k + 3) : tilde_H(n, m, k + 3);
                        auto expected = reduced_homology(independence_complex(upper)).shifted(1);
                        auto computed = reduced_homology(independence_complex(lower));
                        return profile_case(std::string("tilde") + fam + " n=" + std::to_string(n) +
                                                " m=" + std::to_string(m) +
                                                " k=" + std::to_string(k),
                                            lower, expected, computed);
                    });
    return {"grids", 0, run_cases(jobs, threads)};
}

namespace {

CaseResult shifted_case(const std::string& params, const Graph& input,
                        const HomologyProfile& base, int shift,
                        const HomologyProfile& computed) {
    CaseResult result;
    result.params = params;
    result.expected = profile_to_text(base.shifted(shift));
    result.computed = profile_to_text(computed);
    result.pass = base.shifted(shift) == computed;
    if (!result.pass) result.repro = graph_repro(input, result.expected, result.computed);
    return result;
}

CaseResult jonsson_case(const std::string& params, const Graph& g) {
    auto ig = independence_complex(g);
    auto out = jonsson_graph(ig);
    return shifted_case(params, g, reduced_homology(ig), 1,
                        reduced_homology(independence_complex(out.graph)));
}

CaseResult csorba_case(const std::string& params, const Graph& g) {
    auto dual = alexander_dual(independence_complex(g));
    auto out = csorba_full_subdivision(g);
    return shifted_case(params, g, reduced_homology(dual), 1,
                        reduced_homology(independence_complex(out.graph)));
}

CaseResult subdivide_case(const std::string& params, const Graph& g) {
    auto out = subdivide_edge_four(g, g.edges().front());
    return shifted_case(params, g, reduced_homology(independence_complex(g)), 1,
                        reduced_homology(independence_complex(out.graph)));
}

CaseResult suspension_case(const std::string& params, const Graph& g) {
    Graph h;
    if (g.edge_count() > 0) {
        auto [a, b] = g.edges().front();
        h = Graph::from_edge_list({a, b}, {{a, b}});
    }
    auto out = graph_suspension(g, h);
    return shifted_case(params, g, reduced_homology(independence_complex(g)), 1,
                        reduced_homology(independence_complex(out.graph)));
}

std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> disjoint_edge_pair(
    const Graph& g) {
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& [a, b] = edges[i];
            const auto& [c, d] = edges[j];
            if (a != c && a != d && b != c && b != d) return std::make_pair(edges[i], edges[j]);
        }
    return std::nullopt;
}

CaseResult crossing_case(const std::string& params, const Graph& g,
                         std::pair<std::pair<int, int>, std::pair<int, int>> pair) {
    auto out = crossing_resolution(g, pair.first, pair.second);
    return shifted_case(params, g, reduced_homology(independence_complex(g)), 1,
                        reduced_homology(independence_complex(out.graph)));
}

CaseResult degree3_case(const std::string& params, const Graph& g) {
    auto out = degree3_reduction(g);
    return shifted_case(params, g, reduced_homology(independence_complex(g)), out.shifts,
                        reduced_homology(independence_complex(out.graph)));
}

}  // namespace

VerificationReport suite_constructions(std::uint64_t seed, int threads) {
    Jobs jobs;
    auto exhaustive = [&](const char* name, auto applies, auto make) {
        for (int n = 0; n <= 5; ++n)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_bits(n)); ++mask) {
                Graph g = mask_graph(n, mask);
                if (!applies(g)) continue;
                std::string params = std::string(name) + " n=" + std::to_string(n) +
                                     " mask=" + std::to_string(mask);
                jobs.push_back([params, n, mask, make] {
                    return make(params, mask_graph(n, mask));
                });
            }
    };
    auto has_vertex = [](const Graph& g) { return g.vertex_count() > 0; };
    auto has_edge = [](const Graph& g) { return g.edge_count() > 0; };
    auto any = [](const Graph&) { return true; };

    exhaustive("jonsson", has_vertex, jonsson_case);
    exhaustive("csorba", has_edge, csorba_case);
    exhaustive("subdivide", has_edge, subdivide_case);
    exhaustive("suspension", any, suspension_case);
    exhaustive("crossing", [](const Graph& g) { return disjoint_edge_pair(g).has_value(); },
               [](const std::string& params, const Graph& g) {
                   return crossing_case(params, g, *disjoint_edge_pair(g));
               });
    exhaustive("degree3", any, degree3_case);

    // Seeded corpora on 6..9 vertices.  Sampling is shaped where the raw
    // construction output would dwarf the time budget: the bipartite complex
    // graph grows a full simplex over the maximal independent sets, full
    // subdivision adds one vertex per edge, and each unit of degree excess
    // costs one suspension, so all three stay capped.
    constexpr int kSamples = 100;
    constexpr std::uint64_t kStride = 1u << 20;
    for (int i = 0; i < kSamples; ++i) {
        jobs.push_back([i, seed] {
            auto rng = case_rng(seed, kStride * 1 + i);
            Graph g = random_graph(rng, 6 + static_cast<int>(rng.below(4)), 1, 2);
            while (maximal_independent_sets(g).size() > 8)
                g = random_graph(rng, 6 + static_cast<int>(rng.below(4)), 1, 2);
            return jonsson_case("jonsson random #" + std::to_string(i), g);
        });
        jobs.push_back([i, seed] {
            auto rng = case_rng(seed, kStride * 2 + i);
            Graph g = random_graph(rng, 6 + static_cast<int>(rng.below(3)), 3, 10);
            while (g.edge_count() == 0 || g.edge_count() > 12)
                g = random_graph(rng, 6 + static_cast<int>(rng.below(3)), 3, 10);
            return csorba_case("csorba random #" + std::to_string(i), g);
        });
        jobs.push_back([i, seed] {
            auto rng = case_rng(seed, kStride * 3 + i);
            Graph g = random_graph(rng, 6 + static_cast<int>(rng.below(4)), 1, 2);
            while (g.edge_count() == 0)
                g = random_graph(rng, 6 + static_cast<int>(rng.below(4)), 1, 2);
            return subdivide_case("subdivide random #" + std::to_string(i), g);
        });
        jobs.push_back([i, seed] {
            auto rng = case_rng(seed, kStride * 4 + i);
            Graph g = random_graph(rng, 6 + static_cast<int>(rng.below(4)), 1, 2);
            return suspension_case("suspension random #" + std::to_string(i), g);
        });
        jobs.push_back([i, seed] {
            auto rng = case_rng(seed, kStride * 5 + i);
            Graph g = random_graph(rng, 6 + static_cast<int>(rng.below(4)), 1, 2);
            while (!disjoint_edge_pair(g).has_value())
                g = random_graph(rng, 6 + static_cast<int>(rng.below(4)), 1, 2);
            return crossing_case("crossing random #" + std::to_string(i), g,
                                 *disjoint_edge_pair(g));
        });
        jobs.push_back([i, seed] {
            auto rng = case_rng(seed, kStride * 6 + i);
            Graph g = random_graph(rng, 6 + static_cast<int>(rng.below(4)), 1, 3);
            while (degree_excess(g) > 4)
                g = random_graph(rng, 6 + static_cast<int>(rng.below(4)), 1, 3);
            return degree3_case("degree3 random #" + std::to_string(i), g);
        });
    }
    return {"constructions", seed, run_cases(jobs, threads)};
}

VerificationReport suite_dowker(std::uint64_t seed, int threads) {
    Jobs jobs;
    for (int i = 0; i < 50; ++i)
        jobs.push_back([i, seed] {
            auto rng = case_rng(seed, static_cast<std::uint64_t>(i));
            int nx = 1 + static_cast<int>(rng.below(6));
            int ny = 1 + static_cast<int>(rng.below(6));
            std::vector<int> xs(nx), ys(ny);
            std::iota(xs.begin(), xs.end(), 0);
            std::iota(ys.begin(), ys.end(), 0);
            std::set<std::pair<int, int>> pairs;
            for (int x : xs)
                for (int y : ys)
                    if (rng.chance(1, 2)) pairs.insert({x, y});
            auto relation = Relation::create(xs, ys, pairs);
            auto [kx, ky] = dowker_pair(relation);
            auto px = reduced_homology(kx);
            auto py = reduced_homology(ky);
            CaseResult result;
            result.params = "case=" + std::to_string(i) + " |X|=" + std::to_string(nx) +
                            " |Y|=" + std::to_string(ny);
            result.expected = profile_to_text(px);
            result.computed = profile_to_text(py);
            result.pass = px == py;
            if (!result.pass)
                result.repro = json{{"relation", relation_to_json(relation)},
                                    {"expected", result.expected},
                                    {"computed", result.computed}}
                                   .dump();
            return result;
        });
    return {"dowker", seed, run_cases(jobs, threads)};
}

VerificationReport suite_starclusters(std::uint64_t seed, int threads) {
    Jobs jobs;
    std::uint64_t counter = 0;
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_bits(n)); ++mask)
            jobs.push_back([n, mask, seed, ctr = counter++] {
                Graph g = mask_graph(n, mask);
                auto ig = independence_complex(g);
                auto faces = ig.all_faces();
                auto rng = case_rng(seed, ctr);
                std::vector<std::size_t> order(faces.size());
                std::iota(order.begin(), order.end(), 0);
                std::size_t take = std::min<std::size_t>(20, order.size());
                for (std::size_t k = 0; k < take; ++k)
                    std::swap(order[k], order[k + rng.below(order.size() - k)]);

                CaseResult result;
                result.params = "n=" + std::to_string(n) + " mask=" + std::to_string(mask);
                result.expected = "every sampled cluster: point homology, collapses to a point";
                result.pass = true;
                for (std::size_t k = 0; k < take && result.pass; ++k) {
                    const Simplex& sigma = faces[order[k]];
                    auto cluster = star_cluster(ig, sigma);
                    auto profile = reduced_homology(cluster);
                    bool collapses = greedy_collapse(cluster).collapsible();
                    if (profile.is_point() && collapses) continue;
                    result.pass = false;
                    std::string labels;
                    for (int v : sigma.vertices())
                        labels += (labels.empty() ? "" : " ") + std::to_string(v);
                    result.computed = "sigma {" + labels + "}: profile " +
                                      profile_to_text(profile) +
                                      (collapses ? "" : ", greedy collapse stuck");
                    result.repro = json{{"graph", graph_to_json(g)},
                                        {"sigma", sigma.vertices()},
                                        {"profile", profile_to_json(profile)}}
                                       .dump();
                }
                if (result.pass)
                    result.computed = std::to_string(take) + " simplices checked";
                return result;
            });
    return {"starclusters", seed, run_cases(jobs, threads)};
}

VerificationReport suite_clawfree(std::uint64_t seed, int threads) {
    Jobs jobs;
    auto connectivity_job = [](std::string params, Graph g) {
        return std::function<CaseResult()>([params = std::move(params), g = std::move(g)] {
            long bound = clawfree_bound(g);
            auto conn = homological_connectivity(independence_complex(g));
            CaseResult result;
            result.params = params;
            result.expected = "connectivity >= " + std::to_string(bound);
            result.computed = "connectivity " + conn.text();
            result.pass = conn.at_least(static_cast<int>(bound));
            if (!result.pass) result.repro = graph_repro(g, result.expected, result.computed);
            return result;
        });
    };
    for (int n = 0; n <= 6; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_bits(n)); ++mask) {
            Graph g = mask_graph(n, mask);
            if (!is_claw_free(g)) continue;
            jobs.push_back(connectivity_job(
                "n=" + std::to_string(n) + " mask=" + std::to_string(mask), std::move(g)));
        }
    for (int i = 0; i < 200; ++i)
        jobs.push_back([i, seed, connectivity_job] {
            auto rng = case_rng(seed, static_cast<std::uint64_t>(i));
            Graph g = random_claw_free(rng, 7 + static_cast<int>(rng.below(3)), 1, 2);
            return connectivity_job("random #" + std::to_string(i) + " n=" +
                                        std::to_string(g.vertex_count()),
                                    std::move(g))();
        });
    return {"clawfree", seed, run_cases(jobs, threads)};
}

VerificationReport suite_sharpness(int k_max, int threads) {
    if (k_max < 1) throw std::invalid_argument("sharpness suite needs k_max >= 1");
    Jobs jobs;
    for (int k = 1; k <= k_max; ++k)
        for (char fam : {'A', 'B'})
            jobs.push_back([k, fam] {
                Graph g = fam == 'A' ? family_A(k) : family_B(k);
                auto m = matching_complex(g).complex;
                int dim_expected = fam == 'A' ? 2 * k - 1 : 2 * k - 2;
                auto expected = sphere_profile(k - 1, 1);
                auto profile = reduced_homology(m);
                CaseResult result;
                result.params = std::string(1, fam) + " k=" + std::to_string(k);
                result.expected = "dim " + std::to_string(dim_expected) + "; " +
                                  profile_to_text(expected);
                result.computed = "dim " + std::to_string(m.dim()) + "; " +
                                  profile_to_text(profile);
                result.pass = m.dim() == dim_expected && profile == expected;
                if (!result.pass) result.repro = graph_repro(g, result.expected, result.computed);
                return result;
            });
    return {"sharpness", 0, run_cases(jobs, threads)};
}

namespace {

CaseResult cover_case(const std::string& params, const Graph& g, bool catloc) {
    auto whole = independence_complex(g);
    std::vector<SimplicialComplex> pieces;
    if (catloc) {
        int v = g.vertices().front();
        for (int u : g.vertices())
            if (g.degree(u) > g.degree(v)) v = u;
        pieces = catloc_cover(g, v);
    } else {
        pieces = chromatic_cover(g);
    }
    auto check = check_cover(pieces, whole);
    CaseResult result;
    result.params = params;
    result.expected = "union equals the complex; every piece a homology point";
    result.computed = std::to_string(pieces.size()) + " pieces; union " +
                      (check.union_matches ? "matches" : "differs") + "; point homology " +
                      (check.pieces_point_homology ? "holds" : "fails") + "; collapse " +
                      (check.pieces_collapse ? "holds" : "fails");
    result.pass = check.union_matches && check.pieces_point_homology;
    if (!result.pass) result.repro = graph_repro(g, result.expected, result.computed);
    return result;
}

}  // namespace

VerificationReport suite_covers(std::uint64_t seed, int threads) {
    Jobs jobs;
    for (bool catloc : {true, false}) {
        const char* kind = catloc ? "catloc" : "chromatic";
        jobs.push_back([catloc, kind] {
            return cover_case(std::string(kind) + " C5", cycle(5), catloc);
        });
        jobs.push_back([catloc, kind] {
            return cover_case(std::string(kind) + " petersen", kneser(2, 1), catloc);
        });
        for (int n = 1; n <= 6; ++n)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_bits(n)); ++mask)
                jobs.push_back([catloc, kind, n, mask] {
                    return cover_case(std::string(kind) + " n=" + std::to_string(n) +
                                          " mask=" + std::to_string(mask),
                                      mask_graph(n, mask), catloc);
                });
        for (int i = 0; i < 25; ++i)
            jobs.push_back([catloc, kind, i, seed] {
                auto rng = case_rng(seed, (catloc ? 0 : 1000) + static_cast<std::uint64_t>(i));
                Graph g = random_graph(rng, 7 + static_cast<int>(rng.below(4)), 1, 2);
                return cover_case(std::string(kind) + " random #" + std::to_string(i) + " n=" +
                                      std::to_string(g.vertex_count()),
                                  g, catloc);
            });
    }
    return {"covers", seed, run_cases(jobs, threads)};
}

namespace {

// Component multisets of paths and cycles, one labeled representative per
// multiset; parts listed in non-increasing (is_cycle, size) order.
using Component = std::pair<bool, int>;

void collect_multisets(int remaining, Component limit, std::vector<Component>& current,
                       std::vector<std::vector<Component>>& out) {
    if (!current.empty()) out.push_back(current);
    for (bool is_cycle : {true, false})
        for (int size = remaining; size >= (is_cycle ? 3 : 1); --size) {
            Component part{is_cycle, size};
            if (limit < part) continue;
            current.push_back(part);
            collect_multisets(remaining - size, part, current, out);
            current.pop_back();
        }
}

Graph components_graph(const std::vector<Component>& parts) {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
    int base = 0;
    for (const auto& [is_cycle, size] : parts) {
        for (int i = 0; i < size; ++i) vertices.push_back(base + i);
        for (int i = 0; i + 1 < size; ++i) edges.emplace_back(base + i, base + i + 1);
        if (is_cycle) edges.emplace_back(base, base + size - 1);
        base += size;
    }
    return Graph::from_edge_list(vertices, edges);
}

std::string components_text(const std::vector<Component>& parts) {
    std::string out;
    for (const auto& [is_cycle, size] : parts) {
        if (!out.empty()) out += "+";
        out += (is_cycle ? "C" : "P") + std::to_string(size);
    }
    return out;
}

}  // namespace

VerificationReport suite_maxdeg2(int threads) {
    std::vector<std::vector<Component>> multisets;
    std::vector<Component> current;
    collect_multisets(12, Component{true, 12}, current, multisets);

    Jobs jobs;
    for (const auto& parts : multisets)
        jobs.push_back([parts] {
            Graph g = components_graph(parts);
            auto profile = reduced_homology(independence_complex(g));
            CaseResult result;
            result.params = components_text(parts);
            result.expected = "point or 2^r equal spheres in dimension >= r-1";
            result.pass = false;
            if (profile.is_point()) {
                result.computed = "point";
                result.pass = true;
            } else if (auto wedge = profile.wedge_of_spheres()) {
                auto [dim, count] = *wedge;
                bool power = count > 0 && (count & (count - 1)) == 0;
                int r = power ? std::countr_zero(static_cast<unsigned long long>(count)) : 0;
                result.computed = std::to_string(count) + " spheres S^" + std::to_string(dim);
                result.pass = power && dim >= r - 1;
            } else {
                result.computed = profile_to_text(profile);
            }
            if (!result.pass) result.repro = graph_repro(g, result.expected, result.computed);
            return result;
        });
    return {"maxdeg2", 0, run_cases(jobs, threads)};
}

VerificationReport suite_snf_oracle(int count, std::uint64_t seed, int threads) {
    if (count < 0) throw std::invalid_argument("oracle suite needs count >= 0");
    Jobs jobs;
    auto diagonal_text = [](const std::vector<BigInt>& diagonal) {
        std::string out = "[";
        for (std::size_t i = 0; i < diagonal.size(); ++i) {
            if (i) out += " ";
            out += diagonal[i].str();
        }
        return out + "]";
    };
    for (int i = 0; i < count; ++i)
        jobs.push_back([i, seed, diagonal_text] {
            auto rng = case_rng(seed, static_cast<std::uint64_t>(i));
            IntegerMatrix m(1 + rng.below(8), 1 + rng.below(8));
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, BigInt(rng.range(-9, 9)));
            auto fast = smith_normal_form(m, true);
            auto reference = smith_normal_form_reference(m);
            CaseResult result;
            result.params = "case=" + std::to_string(i) + " " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols());
            result.expected = diagonal_text(reference.diagonal);
            result.computed = diagonal_text(fast.diagonal);
            result.pass =
                fast.diagonal == reference.diagonal && fast.rank == reference.rank;
            if (!result.pass) {
                json entries = json::array();
                for (const auto& [rc, value] : m.entries())
                    entries.push_back({rc.first, rc.second, value.convert_to<long long>()});
                result.repro = json{{"rows", m.rows()},
                                    {"cols", m.cols()},
                                    {"entries", entries},
                                    {"expected", result.expected},
                                    {"computed", result.computed}}
                                   .dump();
            }
            return result;
        });
    jobs.push_back([] {
        auto plane = SimplicialComplex::from_facets({{1, 2, 3},
                                                     {1, 3, 4},
                                                     {1, 4, 5},
                                                     {1, 5, 6},
                                                     {1, 2, 6},
                                                     {2, 3, 5},
                                                     {2, 4, 5},
                                                     {2, 4, 6},
                                                     {3, 4, 6},
                                                     {3, 5, 6}});
        auto expected = HomologyProfile({{1, HomologyGroup{0, {BigInt(2)}}}});
        auto profile = reduced_homology(plane);
        CaseResult result;
        result.params = "projective plane";
        result.expected = profile_to_text(expected);
        result.computed = profile_to_text(profile);
        result.pass = profile == expected;
        return result;
    });
    return {"snf-oracle", seed, run_cases(jobs, threads)};
}

VerificationReport suite_barycentric(std::uint64_t seed, int threads) {
    Jobs jobs;
    auto check = [](std::string params, SimplicialComplex k) {
        return std::function<CaseResult()>([params = std::move(params), k = std::move(k)] {
            auto subdivision = barycentric_subdivision(k).complex;
            auto flags = independence_complex(incomparability_graph(k).graph);
            CaseResult result;
            result.params = params;
            result.expected = "independence complex of the incomparability graph equals the "
                              "barycentric subdivision";
            result.computed = flags == subdivision
                                  ? "equal on " + std::to_string(subdivision.face_count()) +
                                        " faces"
                                  : "complexes differ";
            result.pass = flags == subdivision;
            if (!result.pass)
                result.repro = json{{"complex", complex_to_json(k)},
                                    {"subdivision", complex_to_json(subdivision)},
                                    {"independence", complex_to_json(flags)}}
                                   .dump();
            return result;
        });
    };
    jobs.push_back(check("empty", SimplicialComplex()));
    jobs.push_back(check("point", SimplicialComplex::from_facets({{0}})));
    jobs.push_back(check("edge", SimplicialComplex::from_facets({{0, 1}})));
    jobs.push_back(check("hollow triangle", SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}})));
    jobs.push_back(check("solid triangle", SimplicialComplex::from_facets({{0, 1, 2}})));
    for (int i = 0; i < 100; ++i)
        jobs.push_back([i, seed, check] {
            auto rng = case_rng(seed, static_cast<std::uint64_t>(i));
            auto k = random_complex(rng, 5, 8);
            return check("random #" + std::to_string(i) + " faces=" +
                             std::to_string(k.face_count()),
                         std::move(k))();
        });
    return {"barycentric", seed, run_cases(jobs, threads)};
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opts) {
    auto or_default = [](int value, int fallback) { return value >= 0 ? value : fallback; };
    if (name == "cycles") return suite_cycles(or_default(opts.n_max, 15), opts.threads);
    if (name == "forests")
        return suite_forests(or_default(opts.count, 200), or_default(opts.v_max, 14), opts.seed,
                             opts.threads);
    if (name == "kneser") return suite_kneser(or_default(opts.k_max, 3), opts.threads);
    if (name == "grids")
        return suite_grids(or_default(opts.n_max, 5), or_default(opts.n_max, 5), opts.threads);
    if (name == "constructions") return suite_constructions(opts.seed, opts.threads);
    if (name == "dowker") return suite_dowker(opts.seed, opts.threads);
    if (name == "starclusters") return suite_starclusters(opts.seed, opts.threads);
    if (name == "clawfree") return suite_clawfree(opts.seed, opts.threads);
    if (name == "sharpness") return suite_sharpness(or_default(opts.k_max, 4), opts.threads);
    if (name == "covers") return suite_covers(opts.seed, opts.threads);
    if (name == "maxdeg2") return suite_maxdeg2(opts.threads);
    if (name == "snf-oracle")
        return suite_snf_oracle(or_default(opts.count, 1000), opts.seed, opts.threads);
    if (name == "barycentric") return suite_barycentric(opts.seed, opts.threads);
    throw std::invalid_argument("unknown suite \"" + name + "\"");
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "cycles",    "forests",   "kneser",    "grids",   "constructions",
        "dowker",    "starclusters", "clawfree", "sharpness", "covers",
        "maxdeg2",   "snf-oracle", "barycentric"};
    return names;
}

}  // namespace indcomp
