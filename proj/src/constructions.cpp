#include "indcomp/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace indcomp {

namespace {

std::string set_text(const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

std::pair<int, int> sorted_edge(std::pair<int, int> e) {
    return {std::min(e.first, e.second), std::max(e.first, e.second)};
}

}  // namespace

Relation Relation::create(std::vector<int> xs, std::vector<int> ys,
                          std::set<std::pair<int, int>> pairs) {
    Relation r{std::move(xs), std::move(ys), std::move(pairs)};
    std::sort(r.xs.begin(), r.xs.end());
    std::sort(r.ys.begin(), r.ys.end());
    if (std::adjacent_find(r.xs.begin(), r.xs.end()) != r.xs.end() ||
        std::adjacent_find(r.ys.begin(), r.ys.end()) != r.ys.end())
        throw std::invalid_argument("duplicate relation label");
    for (const auto& [x, y] : r.pairs)
        if (!std::binary_search(r.xs.begin(), r.xs.end(), x) ||
            !std::binary_search(r.ys.begin(), r.ys.end(), y))
            throw std::invalid_argument("relation pair outside X x Y");
    return r;
}

GraphBuildResult jonsson_graph(const SimplicialComplex& k) {
    if (k.empty()) throw std::invalid_argument("complex has no maximal simplices");
    GraphBuildResult out;
    for (int v : k.ground()) out.graph.add_vertex(v);
    int fresh = k.ground().back() + 1;
    for (const auto& facet : k.facets()) {
        out.graph.add_vertex(fresh);
        out.provenance[fresh] = "maximal simplex " + set_text(facet.vertices());
        for (int v : k.ground())
            if (!facet.contains(v)) out.graph.add_edge(v, fresh);
        ++fresh;
    }
    return out;
}

GraphBuildResult csorba_full_subdivision(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("full subdivision needs at least one edge");
    GraphBuildResult out;
    for (int v : g.vertices()) out.graph.add_vertex(v);
    int fresh = g.fresh_label();
    for (const auto& [a, b] : g.edges()) {
        out.graph.add_vertex(fresh);
        out.provenance[fresh] = "subdivides edge (" + std::to_string(a) + "," +
                                std::to_string(b) + ")";
        out.graph.add_edge(a, fresh);
        out.graph.add_edge(fresh, b);
        ++fresh;
    }
    return out;
}

GraphBuildResult subdivide_edge_four(const Graph& g, std::pair<int, int> e) {
    auto [a, b] = sorted_edge(e);
    if (!g.has_edge(a, b))
        throw std::invalid_argument("subdivision target is not an edge");
    GraphBuildResult out;
    out.graph = g;
    out.graph.remove_edge(a, b);
    const int base = g.fresh_label();
    int prev = a;
    for (int i = 0; i < 3; ++i) {
        out.graph.add_vertex(base + i);
        out.provenance[base + i] = "subdivision point " + std::to_string(i + 1) +
                                   " of edge (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")";
        out.graph.add_edge(prev, base + i);
        prev = base + i;
    }
    out.graph.add_edge(prev, b);
    return out;
}

std::pair<SimplicialComplex, SimplicialComplex> dowker_pair(const Relation& r) {
    if (r.xs.empty() || r.ys.empty())
        throw std::invalid_argument("relation needs non-empty sides");
    std::vector<std::vector<int>> x_facets, y_facets;
    for (int y : r.ys) {
        std::vector<int> fiber;
        for (int x : r.xs)
            if (r.pairs.count({x, y})) fiber.push_back(x);
        if (!fiber.empty()) x_facets.push_back(std::move(fiber));
    }
    for (int x : r.xs) {
        std::vector<int> fiber;
        for (int y : r.ys)
            if (r.pairs.count({x, y})) fiber.push_back(y);
        if (!fiber.empty()) y_facets.push_back(std::move(fiber));
    }
    return {SimplicialComplex::from_facets(x_facets, r.xs),
            SimplicialComplex::from_facets(y_facets, r.ys)};
}

GraphBuildResult graph_suspension(const Graph& g, const Graph& h) {
    if (!is_subgraph(h, g)) throw std::invalid_argument("H is not a subgraph of G");
    GraphBuildResult out;
    for (int w : g.vertices()) out.graph.add_vertex(w);
    for (const auto& [a, b] : g.edges())
        if (!h.has_edge(a, b)) out.graph.add_edge(a, b);

    const int v = g.fresh_label();
    out.graph.add_vertex(v);
    out.provenance[v] = "suspension apex";

    auto sets = maximal_independent_sets(h);
    if (sets.empty()) sets.push_back({});  // the empty graph's one maximal set
    int fresh = v + 1;
    for (const auto& m : sets) {
        out.graph.add_vertex(fresh);
        out.provenance[fresh] = "maximal independent set " + set_text(m) + " of H";
        out.graph.add_edge(v, fresh);
        for (int w : h.vertices())
            if (!std::binary_search(m.begin(), m.end(), w)) out.graph.add_edge(w, fresh);
        ++fresh;
    }
    return out;
}

GraphBuildResult crossing_resolution(const Graph& g, std::pair<int, int> e1,
                                     std::pair<int, int> e2) {
    auto [a, b] = sorted_edge(e1);
    auto [c, d] = sorted_edge(e2);
    if (!g.has_edge(a, b) || !g.has_edge(c, d))
        throw std::invalid_argument("crossing resolution needs two edges of G");
    if (a == c || a == d || b == c || b == d)
        throw std::invalid_argument("crossing edges must be disjoint");
    Graph h = Graph::from_edge_list({a, b, c, d}, {{a, b}, {c, d}});
    return graph_suspension(g, h);
}

Degree3Result degree3_reduction(const Graph& g) {
    Degree3Result out{g, 0, {}};
    for (;;) {
        int w = -1;
        for (int cand : out.graph.vertices())
            if (out.graph.degree(cand) > 3) {
                w = cand;
                break;
            }
        if (w < 0) break;
        const auto& nbrs = out.graph.neighbors(w);
        auto it = nbrs.begin();
        const int w1 = *it;
        const int w2 = *std::next(it);
        Graph h = Graph::from_edge_list({w, w1, w2}, {{w, w1}, {w, w2}});

        long before = 0, after = 0;
        for (int cand : out.graph.vertices())
            before += std::max(out.graph.degree(cand) - 3, 0);
        auto step = graph_suspension(out.graph, h);
        for (int cand : step.graph.vertices())
            after += std::max(step.graph.degree(cand) - 3, 0);
        if (after >= before)
            throw std::logic_error("degree reduction measure failed to decrease");

        out.graph = std::move(step.graph);
        out.provenance.merge(step.provenance);
        ++out.shifts;
    }
    return out;
}

namespace {

// Depth-first search for a pairwise non-adjacent neighbor transversal.
bool independent_transversal(const Graph& g, const std::vector<int>& s,
                             std::size_t i, std::vector<int>& picked) {
    if (i == s.size()) return true;
    for (int w : g.neighbors(s[i])) {
        bool clash = false;
        for (int prev : picked)
            if (g.has_edge(prev, w)) {
                clash = true;
                break;
            }
        if (clash) continue;
        picked.push_back(w);
        if (independent_transversal(g, s, i + 1, picked)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

bool contractibility_criterion(const Graph& g, const std::vector<int>& s) {
    for (int v : s)
        if (!g.has_vertex(v))
            throw std::invalid_argument("unknown vertex " + std::to_string(v));
    if (s.empty()) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j]) throw std::invalid_argument("repeated vertex in S");
            int d = distance(g, s[i], s[j]);
            if (d != kUnreachable && d < 3) return false;
        }
    std::vector<int> picked;
    return !independent_transversal(g, s, 0, picked);
}

}  // namespace indcomp
