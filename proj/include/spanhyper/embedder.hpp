#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spanhyper/hypergraph.hpp"
#include "spanhyper/profile.hpp"
#include "spanhyper/rational.hpp"
#include "spanhyper/search.hpp"

namespace spanhyper {

// Partition X_0..X_t of a bounded-degree pattern: X_t holds floor(eps*n)
// vertices sharing one canonical profile, X_0 = N_F(X_t), the remaining
// classes are 3-independent color classes of the cube of the shadow graph.
struct EmbedPartition {
    int t = 0;
    Rational epsilon;
    std::vector<std::vector<int>> classes;  // classes[i] = X_i, sorted
    CanonicalProfile profile;               // common profile of X_t members
};

// Throws invalid_argument when ep violates any structural invariant for f.
void validate_embed_partition(const Hypergraph& f, const EmbedPartition& ep);

// Builds the partition: colors the third power of the shadow with at most
// t-1 colors, carves X_t out of the largest class (most frequent profile),
// sets X_0 = N_F(X_t) and removes it from the other classes. Without
// t_override, t = r^3*delta^3 and epsilon must satisfy the bound
// 1/(profile_count*(t-1)) with profile_count the number of distinct
// canonical profiles in f. A t_override lifts the epsilon bound and acts
// as a floor on t: a pattern whose shadow-cube needs more than t-1 colors
// gets a correspondingly larger t.
EmbedPartition partition_pattern(const Hypergraph& f, int delta, const Rational& epsilon,
                                 std::optional<int> t_override = std::nullopt);

// Host-side partition V_0..V_t: |V_i| = floor(eps*n/(10t)) for i >= 1 taken
// from the top vertex ids in consecutive blocks, remainder in V_0.
struct HostPartition {
    int n = 0;
    int t = 0;
    Rational epsilon;
    std::vector<std::vector<int>> classes;  // classes[i] = V_i, sorted
};

HostPartition make_host_partition(int n, int t, const Rational& epsilon);
void validate_host_partition(const HostPartition& hp);

// Bipartite graph between a family of link-set collections and candidate
// host vertices: L ~ w iff every (r-1)-set in L extends to a host edge
// through w.
struct AuxBipartite {
    std::vector<std::vector<std::vector<int>>> left;  // left[i] = collection of (r-1)-sets
    std::vector<int> right;                           // host vertices
    std::vector<std::vector<int>> adj;                // adj[i] = indices into right
};

// Validates that the collections are pairwise disjoint as set families and
// that right avoids every vertex appearing on the left; computes adjacency
// exactly. An empty collection is adjacent to every right vertex.
AuxBipartite build_aux(const Hypergraph& h, const std::vector<std::vector<std::vector<int>>>& lfamily,
                       const std::vector<int>& w);

// Either a left-perfect matching or a Hall violator U with |N(U)| < |U|.
struct MatchResult {
    bool saturating = false;
    std::vector<int> pairs;     // left index -> right index, -1 if unmatched
    std::vector<int> violator;  // left indices, empty when saturating
};

MatchResult max_bipartite_matching(const AuxBipartite& b);

enum class GoodnessMode { Exhaustive, Sampled };

struct GoodnessOptions {
    GoodnessMode mode = GoodnessMode::Sampled;
    int samples = 200;  // per property in sampled mode
    std::uint64_t seed = 0;
    int jobs = 0;
    std::uint64_t budget = kDefaultSearchBudget;  // disjoint-copy search budget
};

struct PropertyReport {
    bool holds = true;
    bool vacuous = false;    // no admissible instance exists at this size
    long long checked = 0;   // instances examined
    std::string witness;     // describes the first failure
};

struct GoodnessReport {
    int copies_needed = 0;   // floor(eps*n)
    bool copies_found = false;
    PropertyReport p1, p2, p3;
    bool all_hold = false;
};

// Checks the three host-side properties for the profile family of f:
// (1) floor(eps*n) disjoint profile copies inside V_0 plus expansion of the
//     induced link-set family against vertex sets W up to size (p/2)^-D/2,
// (2) expansion of disjoint k-set collections into each V_i,
// (3) an edge between any large enough collection/vertex-set pair.
// Exhaustive mode enumerates every admissible instance and throws when that
// is infeasible at this size; sampled mode draws opts.samples random
// instances per property with seeds derived from opts.seed.
GoodnessReport check_goodness(const Hypergraph& host, const HostPartition& hp, const Hypergraph& f,
                              const EmbedPartition& ep, double p, int delta,
                              const GoodnessOptions& opts);

struct StageRecord {
    int stage = 0;
    int demand = 0;     // |X_i|
    int available = 0;  // |V_i*| for stage >= 1, |V_0| for stage 0
    long long slack = 0;
    bool matched = false;
    std::vector<int> hall_violator;  // pattern vertices of a failed stage
};

struct EmbedTrace {
    bool success = false;
    int attempts = 0;  // staged passes consumed
    std::vector<StageRecord> stages;  // records of the final pass
    Embedding embedding;  // full pattern-to-host map on success
    std::string failure;  // empty on success
};

// Staged spanning embedding of f into host: stage 0 places the disjoint
// profile copies of F[X_0] into V_0 by backtracking search, stage i >= 1
// embeds X_i via a left-perfect matching of already-embedded link sets
// against the unused vertices of V_0 ... V_i. A pass that hits a Hall
// violator is retried with fresh derived randomness (new stage-0 placement,
// new candidate order), up to `attempts` passes; the trace reports the last
// pass. Every returned embedding is validated; stage failures carry a Hall
// violator. For i <= t-1 the slack |V_i*| - |X_i| >= (9/10)*eps*n is
// asserted whenever eps*n is integral.
EmbedTrace embed_universal(const Hypergraph& host, const Hypergraph& f, const HostPartition& hp,
                           const EmbedPartition& ep, std::uint64_t seed,
                           std::uint64_t budget = kDefaultSearchBudget, int attempts = 32);

}  // namespace spanhyper
