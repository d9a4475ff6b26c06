#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spanhyper/hypergraph.hpp"
#include "spanhyper/search.hpp"

namespace spanhyper {

// All r-sets of V(g) that contain at least one edge of g. The edge count
// never exceeds e(g) * n^(r-2); that bound is checked on every call.
Hypergraph hr_construction(const Graph& g, int r);

// One hyperedge per r-clique of g, enumerated by ordered extension. The
// edge count never exceeds e(g) * max_degree(g)^(r-2); checked on every
// call.
Hypergraph kr_construction(const Graph& g, int r);

// True iff every hyperedge of f contains at least one edge of g.
bool hits(const Graph& g, const Hypergraph& f);

// A graph hitting f together with one covering pair per hyperedge.
struct HittingGraph {
    Graph graph;
    std::vector<std::pair<int, int>> certificate;  // certificate[e] covers edge e
};

// Builds a graph hitting f with max degree at most the max degree of f.
// Greedy pair selection (per hyperedge, the pair with the smallest
// resulting endpoint load) is followed by removal of redundant edges; an
// edge-minimal hitting graph always meets the degree bound, and if the
// check ever failed anyway an exhaustive search over covering pairs runs
// within the given budget.
HittingGraph hitting_graph(const Hypergraph& f, std::uint64_t budget = kDefaultSearchBudget);

// Smallest possible max degree of a graph hitting f, found by branch and
// bound over one covering pair per hyperedge. Only for v(f) <= 12; throws
// when the node budget runs out.
int sigma_exact(const Hypergraph& f, std::uint64_t budget = kDefaultSearchBudget);

// Growth-rate expression n^(r - r/delta) for the minimum edge count of a
// hypergraph containing every member of the bounded-degree family, with no
// hidden constant factor.
double universality_lower_bound(long long n, int r, int delta);

struct UniversalitySample {
    bool contained = false;
    bool budget_exhausted = false;
    bool lifted = false;  // witness found through the base graph's shadow route
    int edges = 0;        // edge count of the sampled pattern
};

struct UniversalityReport {
    int samples = 0;
    int successes = 0;
    double fraction = 0.0;
    std::vector<UniversalitySample> detail;  // one entry per sample index
};

// Draws `samples` random bounded-degree patterns on n vertices and tests
// each for containment in h, in parallel with per-index derived seeds.
// When h was built as the clique lift of a base graph, pass that graph:
// an embedding of the pattern's shadow into the base lifts to a containment
// witness and is tried first, with direct search as the fallback. Every
// witness is validated before it counts.
UniversalityReport verify_universal_sampled(const Hypergraph& h, int n, int r, int delta,
                                            int samples, std::uint64_t seed,
                                            const Graph* base = nullptr,
                                            std::uint64_t budget = kDefaultSearchBudget,
                                            int jobs = 0);

}  // namespace spanhyper
