#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "indcomp/complex.hpp"
#include "indcomp/graph.hpp"

namespace indcomp {

// One elementary collapse: a face with a single proper coface, removed
// together with that coface.  The coface is necessarily a facet one
// dimension up.
struct CollapseStep {
    Simplex free_face;
    Simplex coface;
    bool operator==(const CollapseStep& other) const = default;
};

enum class CollapseVerdict { kCollapsible, kUnknown };

// Greedy failure is not a proof of non-collapsibility, hence "unknown".
struct CollapseTrace {
    std::vector<CollapseStep> steps;
    SimplicialComplex residual;
    CollapseVerdict verdict = CollapseVerdict::kUnknown;
    bool collapsible() const { return verdict == CollapseVerdict::kCollapsible; }
};

// Repeatedly removes the lex-smallest free face with its unique coface until
// no free face remains; collapsible iff the residual is a single point.
CollapseTrace greedy_collapse(const SimplicialComplex& k);

// Re-applies recorded steps, validating each as an elementary collapse of
// the current complex; throws std::invalid_argument on a bad step.
SimplicialComplex replay_collapse(const SimplicialComplex& k,
                                  const std::vector<CollapseStep>& steps);

// Lex-smallest pair v != w with N(v) contained in N(w).  Deleting w then
// preserves the homotopy type of the independence complex, so strong_core
// deletes dominated vertices until none remain.
std::optional<std::pair<int, int>> dominated_vertex(const Graph& g);
Graph strong_core(const Graph& g);

}  // namespace indcomp
