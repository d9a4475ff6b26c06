#pragma once

#include <string>
#include <vector>

#include "spanhyper/hypergraph.hpp"

namespace spanhyper {

// Neighbourhood data of a vertex: zvertices = N(v) sorted ascending; e1 =
// edges induced on N(v); e2 = link sets of v. Both families use local indices
// 0..|Z|-1 into zvertices, each set sorted, families sorted.
struct Profile {
    int center = 0;
    std::vector<int> zvertices;
    std::vector<std::vector<int>> e1;
    std::vector<std::vector<int>> e2;
};

Profile profile(const Hypergraph& h, int v);

// Canonical relabelling of (|Z|, e1, e2) under joint isomorphism: two
// profiles compare equal iff one bijection of the neighbourhoods maps both
// the induced edges and the link sets onto each other.
struct CanonicalProfile {
    int z = 0;
    std::vector<std::vector<int>> e1;
    std::vector<std::vector<int>> e2;
    std::string key;

    bool operator==(const CanonicalProfile& o) const { return key == o.key; }
    bool operator<(const CanonicalProfile& o) const { return key < o.key; }
};

CanonicalProfile canonical_profile(const Profile& p);

}  // namespace spanhyper
