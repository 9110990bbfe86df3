#include "indcomp/bounds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "indcomp/collapse.hpp"

namespace indcomp {

long floor_div(long a, long b) {
    long q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

namespace {

void require_claw_free(const Graph& g) {
    if (auto claw = find_claw(g))
        throw std::invalid_argument("claw at " + std::to_string((*claw)[0]) + " with leaves " +
                                    std::to_string((*claw)[1]) + "," + std::to_string((*claw)[2]) +
                                    "," + std::to_string((*claw)[3]));
}

void require_independent(const Graph& g, const Simplex& sigma) {
    const auto& vs = sigma.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!g.has_vertex(vs[i]))
            throw std::invalid_argument("unknown vertex " + std::to_string(vs[i]));
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j]))
                throw std::invalid_argument("set is not independent: edge (" +
                                            std::to_string(vs[i]) + "," +
                                            std::to_string(vs[j]) + ")");
    }
}

std::string set_text(const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

}  // namespace

long clawfree_bound(const Graph& g) {
    require_claw_free(g);
    return floor_div(independence_complex(g).dim() - 2, 2);
}

namespace {

// Visits every independent set of size <= cap, smallest label first.
bool all_small_independent_sets(const Graph& g, int cap, std::vector<int>& tau,
                                std::size_t next, const auto& visit) {
    if (!visit(tau)) return false;
    if (static_cast<int>(tau.size()) == cap) return true;
    const auto& vs = g.vertices();
    for (std::size_t i = next; i < vs.size(); ++i) {
        bool independent = true;
        for (int u : tau)
            if (g.has_edge(u, vs[i])) {
                independent = false;
                break;
            }
        if (!independent) continue;
        tau.push_back(vs[i]);
        if (!all_small_independent_sets(g, cap, tau, i + 1, visit)) return false;
        tau.pop_back();
    }
    return true;
}

}  // namespace

bool extension_hypothesis(const Graph& g, const Simplex& sigma, int r) {
    require_independent(g, sigma);
    std::vector<int> tau;
    return all_small_independent_sets(g, r, tau, 0, [&](const std::vector<int>& t) {
        for (int v : sigma.vertices()) {
            bool extends = true;
            for (int u : t)
                if (g.has_edge(u, v)) {
                    extends = false;
                    break;
                }
            if (extends) return true;
        }
        return false;
    });
}

long distance3_bound(const Graph& g, const std::vector<int>& s) {
    for (int v : s)
        if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j]) throw std::invalid_argument("repeated vertex in S");
            int d = distance(g, s[i], s[j]);
            if (d != kUnreachable && d < 3)
                throw std::invalid_argument("vertices " + std::to_string(s[i]) + " and " +
                                            std::to_string(s[j]) + " are at distance " +
                                            std::to_string(d));
        }
    return static_cast<long>(s.size()) - 2;
}

long diameter_bound(const Graph& g) { return floor_div(diameter(g), 3) - 1; }

long maxdeg_bound(const Graph& g) {
    const int m = g.max_degree();
    if (m == 0) throw std::invalid_argument("graph has no edges");
    return floor_div(independence_complex(g).dim(), m) - 1;
}

long engstrom_clawfree_bound(const Graph& g) {
    require_claw_free(g);
    const long n = static_cast<long>(g.vertex_count());
    const long m = g.max_degree();
    return floor_div(2 * n - 1, 3 * m + 2) - 1;
}

std::vector<SimplicialComplex> catloc_cover(const Graph& g, int v, std::size_t cap) {
    const auto& nbrs = g.neighbors(v);
    auto classes = chromatic_coloring(induced_subgraph(g, nbrs), cap);
    auto whole = independence_complex(g);
    std::vector<SimplicialComplex> pieces = {star(whole, Simplex({v}))};
    for (const auto& cls : classes) pieces.push_back(star_cluster(whole, Simplex(cls)));
    return pieces;
}

std::vector<SimplicialComplex> chromatic_cover(const Graph& g, std::size_t cap) {
    auto classes = chromatic_coloring(g, cap);
    auto whole = independence_complex(g);
    std::vector<SimplicialComplex> pieces;
    for (const auto& cls : classes) pieces.push_back(star_cluster(whole, Simplex(cls)));
    return pieces;
}

CoverCheck check_cover(const std::vector<SimplicialComplex>& pieces,
                       const SimplicialComplex& whole) {
    CoverCheck out;
    SimplicialComplex acc;
    out.pieces_point_homology = true;
    out.pieces_collapse = true;
    for (const auto& piece : pieces) {
        acc = complex_union(acc, piece);
        if (!reduced_homology(piece).is_point()) out.pieces_point_homology = false;
        if (!greedy_collapse(piece).collapsible()) out.pieces_collapse = false;
    }
    // The union of facet stars misses ground vertices; compare facet sets.
    out.union_matches = acc.facets() == whole.facets();
    return out;
}

namespace {

BoundReport connectivity_report(std::string name, std::string inputs, long claimed,
                                const Graph& g) {
    auto conn = homological_connectivity(independence_complex(g));
    BoundReport out{std::move(name), std::move(inputs), claimed, "", false};
    out.ok = conn.at_least(claimed);
    out.evidence = "connectivity level " + conn.text() + (out.ok ? " >= " : " < ") +
                   std::to_string(claimed);
    return out;
}

BoundReport cover_report(std::string name, std::string inputs, long claimed,
                         const std::vector<SimplicialComplex>& pieces, const Graph& g) {
    auto check = check_cover(pieces, independence_complex(g));
    BoundReport out{std::move(name), std::move(inputs), claimed, "", check.ok()};
    out.evidence = std::to_string(pieces.size()) + " pieces; union " +
                   (check.union_matches ? "matches" : "differs") + "; point homology " +
                   (check.pieces_point_homology ? "holds" : "fails") + "; collapse " +
                   (check.pieces_collapse ? "holds" : "fails");
    return out;
}

}  // namespace

BoundReport report_clawfree(const Graph& g) {
    return connectivity_report("clawfree", "", clawfree_bound(g), g);
}

BoundReport report_extension(const Graph& g, const Simplex& sigma, int r) {
    bool holds = extension_hypothesis(g, sigma, r);
    if (!holds)
        return {"extension", "sigma=" + set_text(sigma.vertices()) + " r=" + std::to_string(r),
                r - 1, "hypothesis fails; no claim", true};
    auto out = connectivity_report(
        "extension", "sigma=" + set_text(sigma.vertices()) + " r=" + std::to_string(r), r - 1, g);
    out.evidence = "hypothesis holds; " + out.evidence;
    return out;
}

BoundReport report_distance3(const Graph& g, const std::vector<int>& s) {
    return connectivity_report("distance3", "S=" + set_text(s), distance3_bound(g, s), g);
}

BoundReport report_diameter(const Graph& g) {
    return connectivity_report("diameter", "", diameter_bound(g), g);
}

BoundReport report_maxdeg(const Graph& g) {
    return connectivity_report("maxdeg", "", maxdeg_bound(g), g);
}

BoundReport report_engstrom(const Graph& g) {
    return connectivity_report("engstrom-clawfree", "", engstrom_clawfree_bound(g), g);
}

BoundReport report_catloc(const Graph& g, int v, std::size_t cap) {
    auto pieces = catloc_cover(g, v, cap);
    return cover_report("catloc", "v=" + std::to_string(v),
                        static_cast<long>(pieces.size()) - 1, pieces, g);
}

BoundReport report_chromatic(const Graph& g, std::size_t cap) {
    auto pieces = chromatic_cover(g, cap);
    return cover_report("chromatic", "", static_cast<long>(pieces.size()), pieces, g);
}

}  // namespace indcomp
