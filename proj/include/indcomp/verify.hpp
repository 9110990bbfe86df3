#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace indcomp {

// One checked instance of a suite's guarantee.  expected and computed are the
// two sides of the suite's comparison rendered as text; repro is empty unless
// the case failed, in which case it holds a self-contained JSON payload (the
// input object plus both profiles) sufficient to replay the case.
struct CaseResult {
    std::string params;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string repro;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases;

    std::size_t passed() const;
    std::size_t failed() const;
    bool ok() const { return failed() == 0; }
};

// Runs the jobs on a small worker pool (threads = 0 picks the hardware
// count) and returns results in submission order, so reports are identical
// whatever the interleaving.
std::vector<CaseResult> run_cases(const std::vector<std::function<CaseResult()>>& jobs,
                                  int threads);

// Each suite checks one guarantee over a deterministic corpus; randomized
// corpora derive every case from (seed, case index), so a report is
// reproducible from its header alone.

// I_{C_n}: single sphere S^{k-1} for n = 3k+-1, wedge of two for n = 3k.
VerificationReport suite_cycles(int n_max, int threads = 0);

// Random forests: profile is a point or a single sphere, and the dominated
// vertex core is a single vertex or a disjoint union of edges (so the
// complex strongly collapses to a point or a cross-polytope boundary).
VerificationReport suite_forests(int count, int v_max, std::uint64_t seed, int threads = 0);

// I of the Kneser graph KG_{2,k}: C(k+3,3) spheres in dimension two.
VerificationReport suite_kneser(int k_max, int threads = 0);

// Grid families: point or single sphere; tilde grids drop one suspension
// per +3 in the cut parameter while it stays below n (and m > 0).
VerificationReport suite_grids(int n_max, int m_max, int threads = 0);

// Homology shift identities of every graph construction, exhaustively on
// small labeled graphs plus seeded random graphs on 6..9 vertices.
VerificationReport suite_constructions(std::uint64_t seed, int threads = 0);

// Both complexes of a random binary relation have equal profiles.
VerificationReport suite_dowker(std::uint64_t seed, int threads = 0);

// Star clusters of simplices of I_G have point homology and greedy-collapse
// to a point, over all labeled graphs on <= 6 vertices.
VerificationReport suite_starclusters(std::uint64_t seed, int threads = 0);

// Claw-free graphs: homological connectivity >= floor((dim I_G - 2) / 2).
VerificationReport suite_clawfree(std::uint64_t seed, int threads = 0);

// Matching complexes of the square/path families realize the claw-free
// bound sharply: dimensions 2k-1 and 2k-2 with a single S^{k-1}.
VerificationReport suite_sharpness(int k_max, int threads = 0);

// Star-cluster covers (vertex star plus color classes, and plain chromatic
// covers) union to I_G exactly with every piece a homology point.
VerificationReport suite_covers(std::uint64_t seed, int threads = 0);

// Graphs of maximum degree <= 2 (disjoint paths and cycles, one labeled
// representative per component multiset, <= 12 vertices): profile is a point
// or 2^r equal spheres S^n with n >= r - 1.
VerificationReport suite_maxdeg2(int threads = 0);

// Optimized Smith reduction against the dense reference on random matrices.
VerificationReport suite_snf_oracle(int count, std::uint64_t seed, int threads = 0);

// independence_complex(incomparability_graph(K)) equals the barycentric
// subdivision of K on the nose, over a seeded corpus of small complexes.
VerificationReport suite_barycentric(std::uint64_t seed, int threads = 0);

// Command-line entry: overrides below -1 (or the zero seed) keep each
// suite's defaults, which match the acceptance corpora.
struct SuiteOptions {
    std::uint64_t seed = 0;
    int threads = 0;
    int n_max = -1;
    int k_max = -1;
    int v_max = -1;
    int count = -1;
};

VerificationReport run_suite(const std::string& name, const SuiteOptions& opts);
const std::vector<std::string>& suite_names();

}  // namespace indcomp
