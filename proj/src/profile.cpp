#include "spanhyper/profile.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace spanhyper {

Profile profile(const Hypergraph& h, int v) {
    h.check_vertex(v);
    Profile p;
    p.center = v;
    std::vector<char> in_z(h.n() + 1, 0);
    for (int ei : h.incident_edges(v))
        for (int w : h.edge(ei))
            if (w != v && !in_z[w]) {
                in_z[w] = 1;
                p.zvertices.push_back(w);
            }
    std::sort(p.zvertices.begin(), p.zvertices.end());

    std::vector<int> local(h.n() + 1, -1);
    for (std::size_t i = 0; i < p.zvertices.size(); ++i) local[p.zvertices[i]] = static_cast<int>(i);

    // Edges induced on N(v): every vertex of such an edge lies in N(v), so it
    // is reachable through the incidence lists of N(v).
    std::vector<char> seen_edge(h.edge_count(), 0);
    for (int z : p.zvertices)
        for (int ei : h.incident_edges(z)) {
            if (seen_edge[ei]) continue;
            seen_edge[ei] = 1;
            auto e = h.edge(ei);
            if (std::all_of(e.begin(), e.end(), [&](int w) { return in_z[w]; })) {
                std::vector<int> le;
                le.reserve(e.size());
                for (int w : e) le.push_back(local[w]);
                std::sort(le.begin(), le.end());
                p.e1.push_back(std::move(le));
            }
        }
    std::sort(p.e1.begin(), p.e1.end());

    for (int ei : h.incident_edges(v)) {
        std::vector<int> ls;
        ls.reserve(h.r() - 1);
        for (int w : h.edge(ei))
            if (w != v) ls.push_back(local[w]);
        std::sort(ls.begin(), ls.end());
        p.e2.push_back(std::move(ls));
    }
    std::sort(p.e2.begin(), p.e2.end());
    return p;
}

namespace {

using SetFamily = std::vector<std::vector<int>>;

SetFamily relabel(const SetFamily& fam, const std::vector<int>& pos) {
    SetFamily out;
    out.reserve(fam.size());
    for (const auto& s : fam) {
        std::vector<int> t;
        t.reserve(s.size());
        for (int x : s) t.push_back(pos[x]);
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> encode(int z, const SetFamily& e1, const SetFamily& e2) {
    std::vector<std::int64_t> out;
    out.push_back(z);
    for (const auto* fam : {&e1, &e2}) {
        out.push_back(-2);
        for (const auto& s : *fam) {
            out.push_back(-1);
            for (int x : s) out.push_back(x);
        }
    }
    return out;
}

// Invariant of a local vertex, stable under joint isomorphism: its degree in
// each family plus the multiset of co-member degrees.
std::vector<std::int64_t> vertex_invariant(int v, int z, const SetFamily& e1, const SetFamily& e2) {
    std::vector<int> d1(z, 0), d2(z, 0);
    for (const auto& s : e1)
        for (int x : s) d1[x]++;
    for (const auto& s : e2)
        for (int x : s) d2[x]++;
    std::vector<std::int64_t> inv{d1[v], d2[v]};
    for (const auto* fam : {&e1, &e2}) {
        std::vector<std::int64_t> co;
        for (const auto& s : *fam)
            if (std::find(s.begin(), s.end(), v) != s.end())
                for (int x : s)
                    if (x != v) co.push_back((static_cast<std::int64_t>(d1[x]) << 20) | d2[x]);
        std::sort(co.begin(), co.end());
        inv.push_back(-3);
        inv.insert(inv.end(), co.begin(), co.end());
    }
    return inv;
}

}  // namespace

CanonicalProfile canonical_profile(const Profile& p) {
    int z = static_cast<int>(p.zvertices.size());
    CanonicalProfile out;
    out.z = z;

    // Group local vertices into invariant classes; positions are blocked by
    // class in sorted invariant order, and the minimum encoding is taken over
    // permutations within blocks. Invariants are isomorphism-stable, so the
    // result is a canonical form.
    std::map<std::vector<std::int64_t>, std::vector<int>> classes;
    for (int v = 0; v < z; ++v) classes[vertex_invariant(v, z, p.e1, p.e2)].push_back(v);

    std::uint64_t combos = 1;
    for (const auto& [inv, members] : classes) {
        for (std::size_t i = 2; i <= members.size(); ++i) {
            combos *= i;
            if (combos > 5'000'000ULL)
                throw std::runtime_error("profile canonicalization limit exceeded (too many symmetric vertices)");
        }
    }

    std::vector<std::vector<int>> blocks;
    for (const auto& [inv, members] : classes) blocks.push_back(members);

    std::vector<int> pos(z, -1);
    int next_pos = 0;
    std::vector<std::int64_t> best;
    SetFamily best_e1, best_e2;

    // Depth-first over blocks; each block's members are permuted over its
    // contiguous position range.
    std::function<void(std::size_t)> rec = [&](std::size_t bi) {
        if (bi == blocks.size()) {
            SetFamily r1 = relabel(p.e1, pos);
            SetFamily r2 = relabel(p.e2, pos);
            auto enc = encode(z, r1, r2);
            if (best.empty() || enc < best) {
                best = std::move(enc);
                best_e1 = std::move(r1);
                best_e2 = std::move(r2);
            }
            return;
        }
        std::vector<int> perm = blocks[bi];
        std::sort(perm.begin(), perm.end());
        int base = next_pos;
        do {
            for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = base + static_cast<int>(i);
            next_pos = base + static_cast<int>(perm.size());
            rec(bi + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
        next_pos = base;
        for (int v : blocks[bi]) pos[v] = -1;
    };
    rec(0);

    if (best.empty()) best = encode(z, {}, {});
    out.e1 = best_e1;
    out.e2 = best_e2;
    std::ostringstream key;
    for (std::int64_t x : best) key << x << ",";
    out.key = key.str();
    return out;
}

}  // namespace spanhyper
