#pragma once

#include <functional>
#include <vector>

#include "indcomp/complex.hpp"
#include "indcomp/graph.hpp"
#include "indcomp/rng.hpp"

namespace indcomp {

// All 2^C(n,2) labeled graphs on vertices 0..n-1, in edge-mask order.
std::vector<Graph> all_graphs_on(int n);
void for_each_graph_on(int n, const std::function<void(const Graph&)>& fn);

// Each candidate edge kept independently with probability num/den.
Graph random_graph(SplitMix64& rng, int n, std::uint64_t num, std::uint64_t den);

// Uniform labeled tree on 0..n-1 (Pruefer decode); n >= 1.
Graph random_tree(SplitMix64& rng, int n);

// Disjoint union of random trees totalling at most v_max vertices.
Graph random_forest(SplitMix64& rng, int v_max);

// Random graph repaired into a claw-free one by joining two independent
// leaves of each remaining claw; terminates since every repair removes a
// non-adjacent pair for good.
Graph random_claw_free(SplitMix64& rng, int n, std::uint64_t num, std::uint64_t den);

// Small random complex with at most `max_faces` faces in total.
SimplicialComplex random_complex(SplitMix64& rng, int max_vertices, std::size_t max_faces);

}  // namespace indcomp
