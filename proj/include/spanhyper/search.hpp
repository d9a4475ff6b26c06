#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spanhyper/hypergraph.hpp"

namespace spanhyper {

enum class SearchStatus { Found, NotFound, BudgetExhausted };

// Injective map from pattern vertices to host vertices; mapping[i] is the
// image of pattern vertex i+1.
struct Embedding {
    std::vector<int> mapping;
};

struct SearchResult {
    SearchStatus status = SearchStatus::NotFound;
    Embedding embedding;     // filled iff status == Found
    std::uint64_t nodes = 0; // vertex assignments attempted
};

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// Backtracking subhypergraph embedding. Pattern vertices are assigned in a
// connected, max-degree-first order; candidates are pruned by host degree and
// by completion lists of already-assigned (r-1)-subsets. NotFound is exact
// (the search space was exhausted); BudgetExhausted means the node budget ran
// out first. With spanning set, requires v(pattern) == v(host).
SearchResult find_embedding(const Hypergraph& host, const Hypergraph& pattern, bool spanning = false,
                            std::uint64_t budget = kDefaultSearchBudget);

// True iff mapping is injective, in range, and every pattern edge lands on a
// host edge.
bool validate_embedding(const Hypergraph& host, const Hypergraph& pattern, const Embedding& emb);

// Wilson score 95% interval for successes out of trials.
std::pair<double, double> wilson_interval(int successes, int trials);

struct CurvePoint {
    double p = 0.0;
    int trials = 0;
    int successes = 0;
    int budget_exhausted = 0;  // trials that ended without a verdict
    double phat = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

struct ThresholdCurve {
    std::string family;     // label for the pattern family
    int n = 0;
    int r = 0;
    std::uint64_t seed = 0;
    std::string timestamp;  // left empty so identical runs produce identical output
    bool coupled = true;
    std::uint64_t budget = kDefaultSearchBudget;
    std::vector<CurvePoint> points;
};

// Empirical containment curve: for each p in p_grid, draws `trials` hosts
// from gnp(n, r, p) and counts spanning containment of pattern. Coupled mode
// reuses one uniform stream per trial index across the whole grid, so the
// host at a smaller p is a subhypergraph of the host at a larger p and the
// curve is monotone by construction. Deterministic for fixed arguments
// regardless of jobs.
ThresholdCurve monte_carlo_curve(const Hypergraph& pattern, const std::string& family,
                                 const std::vector<double>& p_grid, int trials, std::uint64_t seed,
                                 std::uint64_t budget = kDefaultSearchBudget, int jobs = 0,
                                 bool coupled = true);

}  // namespace spanhyper
