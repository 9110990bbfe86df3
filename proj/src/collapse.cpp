#include "indcomp/collapse.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace indcomp {

namespace {

// The unique proper coface of a free face, or nullopt.  Any face with one
// proper coface has it one dimension up: an intermediate face would be a
// second coface.
std::optional<Simplex> sole_coface(const std::set<Simplex>& faces, const Simplex& s) {
    std::optional<Simplex> found;
    for (const auto& f : faces) {
        if (f.size() <= s.size() || !f.contains(s)) continue;
        if (found) return std::nullopt;
        found = f;
    }
    return found;
}

SimplicialComplex complex_of(const std::set<Simplex>& faces) {
    std::vector<std::vector<int>> facets;
    for (const auto& f : faces) {
        bool maximal = true;
        for (const auto& g : faces)
            if (g.size() > f.size() && g.contains(f)) {
                maximal = false;
                break;
            }
        if (maximal) facets.push_back(f.vertices());
    }
    return SimplicialComplex::from_facets(facets);
}

}  // namespace

CollapseTrace greedy_collapse(const SimplicialComplex& k) {
    auto all = k.all_faces();
    std::set<Simplex> faces(all.begin(), all.end());
    CollapseTrace trace;
    for (bool progressed = true; progressed;) {
        progressed = false;
        for (const auto& s : faces) {
            auto coface = sole_coface(faces, s);
            if (!coface) continue;
            trace.steps.push_back({s, *coface});
            faces.erase(*coface);
            faces.erase(s);
            progressed = true;
            break;
        }
    }
    trace.residual = complex_of(faces);
    if (faces.size() == 1 && faces.begin()->size() == 1)
        trace.verdict = CollapseVerdict::kCollapsible;
    return trace;
}

SimplicialComplex replay_collapse(const SimplicialComplex& k,
                                  const std::vector<CollapseStep>& steps) {
    auto all = k.all_faces();
    std::set<Simplex> faces(all.begin(), all.end());
    for (const auto& step : steps) {
        if (!faces.count(step.free_face) || !faces.count(step.coface))
            throw std::invalid_argument("collapse step names a missing face");
        auto coface = sole_coface(faces, step.free_face);
        if (!coface || !(*coface == step.coface))
            throw std::invalid_argument("collapse step is not elementary here");
        faces.erase(step.coface);
        faces.erase(step.free_face);
    }
    return complex_of(faces);
}

std::optional<std::pair<int, int>> dominated_vertex(const Graph& g) {
    const auto& vs = g.vertices();
    for (int v : vs)
        for (int w : vs) {
            if (v == w) continue;
            const auto& nv = g.neighbors(v);
            const auto& nw = g.neighbors(w);
            if (std::includes(nw.begin(), nw.end(), nv.begin(), nv.end()))
                return std::make_pair(v, w);
        }
    return std::nullopt;
}

Graph strong_core(const Graph& g) {
    Graph core = g;
    while (auto pair = dominated_vertex(core)) core.remove_vertex(pair->second);
    return core;
}

}  // namespace indcomp
