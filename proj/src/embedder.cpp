#include "spanhyper/embedder.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "spanhyper/parallel.hpp"
#include "spanhyper/rng.hpp"
#include "spanhyper/subsets.hpp"

namespace spanhyper {

namespace {

long long floor_rat(const Rational& q) {
    if (q < 0) throw std::invalid_argument("expected a non-negative rational");
    BigInt f = numerator(q) / denominator(q);
    return f.convert_to<long long>();
}

bool is_integral(const Rational& q) { return denominator(q) == 1; }

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

// Shadow-cube adjacency: u ~ v iff 1 <= shadow distance <= 3.
std::vector<std::vector<int>> cube_adjacency(const Hypergraph& f) {
    std::vector<std::vector<int>> adj(f.n() + 1);
    for (int v = 1; v <= f.n(); ++v) {
        auto dist = bfs_distances(f, v, 3);
        for (int u = 1; u <= f.n(); ++u)
            if (u != v && dist[u] >= 1) adj[v].push_back(u);
    }
    return adj;
}

std::optional<std::vector<int>> greedy_color(const std::vector<std::vector<int>>& adj,
                                             const std::vector<int>& order, int max_colors) {
    int n = static_cast<int>(adj.size()) - 1;
    std::vector<int> color(n + 1, -1);
    std::vector<char> taken(max_colors, 0);
    for (int v : order) {
        std::fill(taken.begin(), taken.end(), 0);
        for (int u : adj[v])
            if (color[u] >= 0 && color[u] < max_colors) taken[color[u]] = 1;
        int c = 0;
        while (c < max_colors && taken[c]) ++c;
        if (c == max_colors) return std::nullopt;
        color[v] = c;
    }
    return color;
}

std::optional<std::vector<int>> dsatur_color(const std::vector<std::vector<int>>& adj, int max_colors) {
    int n = static_cast<int>(adj.size()) - 1;
    std::vector<int> color(n + 1, -1);
    std::vector<std::set<int>> sat(n + 1);
    for (int step = 0; step < n; ++step) {
        int best = 0;
        for (int v = 1; v <= n; ++v) {
            if (color[v] >= 0) continue;
            if (best == 0 || sat[v].size() > sat[best].size() ||
                (sat[v].size() == sat[best].size() && adj[v].size() > adj[best].size()))
                best = v;
        }
        int c = 0;
        while (sat[best].count(c)) ++c;
        if (c >= max_colors) return std::nullopt;
        color[best] = c;
        for (int u : adj[best])
            if (color[u] < 0) sat[u].insert(c);
    }
    return color;
}

bool exact_color_rec(const std::vector<std::vector<int>>& adj, const std::vector<int>& order,
                     std::size_t pos, int max_colors, int used, std::vector<int>& color,
                     std::uint64_t& nodes) {
    if (pos == order.size()) return true;
    int v = order[pos];
    // a fresh color is interchangeable with any other fresh color, so allow
    // at most one color beyond those already used
    int limit = std::min(max_colors, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool clash = false;
        for (int u : adj[v])
            if (color[u] == c) {
                clash = true;
                break;
            }
        if (clash) continue;
        if (nodes == 0) return false;
        --nodes;
        color[v] = c;
        if (exact_color_rec(adj, order, pos + 1, max_colors, std::max(used, c + 1), color, nodes))
            return true;
        color[v] = -1;
        if (nodes == 0) return false;
    }
    return false;
}

// Greedy clique lower bound; a clique larger than the color budget proves
// the bounded coloring infeasible without search.
int clique_lower_bound(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size()) - 1;
    std::vector<int> seeds(n);
    for (int v = 1; v <= n; ++v) seeds[v - 1] = v;
    std::stable_sort(seeds.begin(), seeds.end(),
                     [&](int a, int b) { return adj[a].size() > adj[b].size(); });
    std::vector<char> mark(n + 1, 0);
    int best = n > 0 ? 1 : 0;
    for (int v : seeds) {
        std::vector<int> clique{v};
        for (int u : adj[v]) {
            for (int w : adj[u]) mark[w] = 1;
            bool all = true;
            for (int w : clique)
                if (!mark[w]) {
                    all = false;
                    break;
                }
            for (int w : adj[u]) mark[w] = 0;
            if (all) clique.push_back(u);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

std::optional<std::vector<int>> color_cube(const std::vector<std::vector<int>>& adj, int max_colors) {
    if (max_colors < 1) return std::nullopt;
    int n = static_cast<int>(adj.size()) - 1;
    if (auto c = dsatur_color(adj, max_colors)) return c;
    if (clique_lower_bound(adj) > max_colors) return std::nullopt;
    std::vector<int> order(n);
    for (int v = 1; v <= n; ++v) order[v - 1] = v;
    if (auto c = greedy_color(adj, order, max_colors)) return c;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return adj[a].size() > adj[b].size(); });
    if (auto c = greedy_color(adj, order, max_colors)) return c;
    for (std::uint64_t attempt = 0; attempt < 61; ++attempt) {
        Rng rng(derive_seed(0x636f6c6f72ULL, {attempt}));
        for (int i = n - 1; i > 0; --i)
            std::swap(order[i], order[rng.next_below(i + 1)]);
        if (auto c = greedy_color(adj, order, max_colors)) return c;
    }
    // exact search, bounded; gives up (rather than answers) at the budget
    std::vector<int> color(n + 1, -1);
    for (int v = 1; v <= n; ++v) order[v - 1] = v;
    std::uint64_t nodes = 20'000'000;
    if (exact_color_rec(adj, order, 0, max_colors, 0, color, nodes)) return color;
    return std::nullopt;
}

// Relabelled induced substructure plus the local-to-global vertex table.
struct Induced {
    Hypergraph h;
    std::vector<int> to_global;  // local id i+1 -> global vertex
};

Induced induced_sub(const Hypergraph& h, const std::vector<int>& verts) {
    std::vector<int> local(h.n() + 1, 0);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i) + 1;
    std::vector<int> flat;
    for (int e = 0; e < h.edge_count(); ++e) {
        auto edge = h.edge(e);
        bool inside = true;
        for (int v : edge)
            if (!local[v]) inside = false;
        if (!inside) continue;
        for (int v : edge) flat.push_back(local[v]);
    }
    return {Hypergraph(h.r(), static_cast<int>(verts.size()), std::move(flat)), verts};
}

struct CopyPlacement {
    SearchStatus status = SearchStatus::NotFound;
    std::vector<int> phi;  // f vertex -> host vertex for X_0 members, else 0
    std::vector<std::vector<std::vector<int>>> f2;  // per X_t member, image link sets
};

// Places the disjoint profile copies F[X_0] into host[v0] by backtracking;
// the host side is relabelled by a seed-derived permutation so different
// seeds explore different placements first.
CopyPlacement place_profile_copies(const Hypergraph& host, const std::vector<int>& v0,
                                   const Hypergraph& f, const EmbedPartition& ep,
                                   std::uint64_t seed, std::uint64_t budget) {
    CopyPlacement out;
    out.phi.assign(f.n() + 1, 0);
    const auto& x0 = ep.classes[0];
    const auto& xt = ep.classes[ep.t];
    if (x0.size() > v0.size()) {
        out.status = SearchStatus::NotFound;
        return out;
    }
    if (x0.empty()) {
        // edgeless profile: nothing to place, every link family is empty
        out.status = SearchStatus::Found;
        out.f2.assign(xt.size(), {});
        return out;
    }
    auto sub_pattern = induced_sub(f, x0);
    auto sub_host = induced_sub(host, v0);
    int m = sub_host.h.n();
    std::vector<int> perm(m + 1), inv(m + 1);
    for (int i = 1; i <= m; ++i) perm[i] = i;
    Rng rng(derive_seed(seed, {0x73746167ULL}));
    for (int i = m; i > 1; --i) std::swap(perm[i], perm[1 + static_cast<int>(rng.next_below(i))]);
    for (int i = 1; i <= m; ++i) inv[perm[i]] = i;
    std::vector<int> flat;
    for (int e = 0; e < sub_host.h.edge_count(); ++e)
        for (int v : sub_host.h.edge(e)) flat.push_back(perm[v]);
    Hypergraph shuffled(sub_host.h.r(), m, std::move(flat));
    auto res = find_embedding(shuffled, sub_pattern.h, false, budget);
    out.status = res.status;
    if (res.status != SearchStatus::Found) return out;
    for (std::size_t i = 0; i < x0.size(); ++i)
        out.phi[x0[i]] = v0[inv[res.embedding.mapping[i]] - 1];
    for (int x : xt) {
        std::vector<std::vector<int>> member;
        for (const auto& s : link(f, x)) {
            std::vector<int> img;
            for (int v : s) img.push_back(out.phi[v]);
            std::sort(img.begin(), img.end());
            member.push_back(std::move(img));
        }
        std::sort(member.begin(), member.end());
        out.f2.push_back(std::move(member));
    }
    return out;
}

// True iff every (r-1)-set of member completes to a host edge through w.
bool member_adjacent(const Hypergraph& h, const std::vector<std::vector<int>>& member, int w) {
    std::vector<int> e;
    for (const auto& s : member) {
        e.assign(s.begin(), s.end());
        auto it = std::lower_bound(e.begin(), e.end(), w);
        if (it != e.end() && *it == w) return false;
        e.insert(it, w);
        if (!h.has_edge(e)) return false;
    }
    return true;
}

std::vector<int> sample_vertices(Rng& rng, const std::vector<int>& pool, std::size_t count) {
    std::vector<int> work(pool);
    for (std::size_t i = 0; i < count; ++i)
        std::swap(work[i], work[i + rng.next_below(work.size() - i)]);
    work.resize(count);
    std::sort(work.begin(), work.end());
    return work;
}

std::vector<std::vector<int>> all_small_subsets(const std::vector<int>& pool, int k) {
    std::vector<std::vector<int>> out;
    if (static_cast<int>(pool.size()) < k || k < 1) return out;
    auto idx = first_subset(k);
    do {
        std::vector<int> s(k);
        for (int i = 0; i < k; ++i) s[i] = pool[idx[i] - 1];
        out.push_back(std::move(s));
    } while (next_subset(idx, static_cast<int>(pool.size())));
    return out;
}

// `count` distinct k-subsets of pool: full enumeration plus shuffle when the
// universe is small, rejection sampling otherwise.
std::vector<std::vector<int>> sample_distinct_subsets(Rng& rng, const std::vector<int>& pool, int k,
                                                      std::size_t count) {
    BigInt universe = big_binomial(static_cast<int>(pool.size()), k);
    if (universe < BigInt(count)) throw std::invalid_argument("not enough distinct subsets");
    if (universe <= BigInt(200000)) {
        auto all = all_small_subsets(pool, k);
        for (std::size_t i = 0; i < count; ++i)
            std::swap(all[i], all[i + rng.next_below(all.size() - i)]);
        all.resize(count);
        return all;
    }
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    while (out.size() < count) {
        auto s = sample_vertices(rng, pool, static_cast<std::size_t>(k));
        if (seen.insert(s).second) out.push_back(std::move(s));
    }
    return out;
}

template <class Fn>
bool subsets_up_to_rec(const std::vector<int>& pool, std::size_t start, int maxs,
                       std::vector<int>& cur, Fn&& fn) {
    if (!cur.empty() && !fn(cur)) return false;
    if (static_cast<int>(cur.size()) == maxs) return true;
    for (std::size_t i = start; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        bool go = subsets_up_to_rec(pool, i + 1, maxs, cur, fn);
        cur.pop_back();
        if (!go) return false;
    }
    return true;
}

// Visits every nonempty subset of pool with size <= maxs; fn returns false
// to abort the walk.
template <class Fn>
void for_each_subset_up_to(const std::vector<int>& pool, int maxs, Fn&& fn) {
    std::vector<int> cur;
    subsets_up_to_rec(pool, 0, maxs, cur, fn);
}

}  // namespace

void validate_embed_partition(const Hypergraph& f, const EmbedPartition& ep) {
    if (ep.t < 2) throw std::invalid_argument("partition needs t >= 2");
    if (static_cast<int>(ep.classes.size()) != ep.t + 1)
        throw std::invalid_argument("partition must have t+1 classes");
    std::vector<int> owner(f.n() + 1, -1);
    for (int i = 0; i <= ep.t; ++i)
        for (int v : ep.classes[i]) {
            if (v < 1 || v > f.n()) throw std::invalid_argument("class vertex out of range");
            if (owner[v] != -1) throw std::invalid_argument("classes overlap at vertex " + std::to_string(v));
            owner[v] = i;
        }
    for (int v = 1; v <= f.n(); ++v)
        if (owner[v] == -1) throw std::invalid_argument("vertex " + std::to_string(v) + " is in no class");
    long long want = floor_rat(ep.epsilon * f.n());
    if (static_cast<long long>(ep.classes[ep.t].size()) != want)
        throw std::invalid_argument("|X_t| must equal floor(eps*n)");
    for (int x : ep.classes[ep.t])
        if (!(canonical_profile(profile(f, x)) == ep.profile))
            throw std::invalid_argument("vertex " + std::to_string(x) + " in X_t has a different profile");
    std::set<int> nbh;
    for (int x : ep.classes[ep.t]) {
        auto dist = bfs_distances(f, x, 1);
        for (int u = 1; u <= f.n(); ++u)
            if (dist[u] == 1) nbh.insert(u);
    }
    std::set<int> x0(ep.classes[0].begin(), ep.classes[0].end());
    if (nbh != x0) throw std::invalid_argument("X_0 must equal N_F(X_t)");
    for (int i = 1; i <= ep.t; ++i)
        if (!is_t_independent(f, ep.classes[i], 3))
            throw std::invalid_argument("class X_" + std::to_string(i) + " is not 3-independent");
}

EmbedPartition partition_pattern(const Hypergraph& f, int delta, const Rational& epsilon,
                                 std::optional<int> t_override) {
    if (delta < 1) throw std::invalid_argument("delta must be at least 1");
    if (f.max_degree() > delta)
        throw std::invalid_argument("pattern max degree " + std::to_string(f.max_degree()) +
                                    " exceeds delta " + std::to_string(delta));
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    int n = f.n(), r = f.r();

    std::vector<CanonicalProfile> prof(n + 1);
    std::map<std::string, int> profile_counts;
    for (int v = 1; v <= n; ++v) {
        prof[v] = canonical_profile(profile(f, v));
        ++profile_counts[prof[v].key];
    }

    long long t;
    if (t_override) {
        t = *t_override;
        if (t < 2) throw std::invalid_argument("t override must be at least 2");
    } else {
        t = static_cast<long long>(r) * r * r * delta * delta * delta;
        Rational bound(BigInt(1), BigInt(profile_counts.size()) * (t - 1));
        if (epsilon > bound)
            throw std::invalid_argument("epsilon exceeds the bound 1/(profiles*(t-1)) = " +
                                        to_string(bound) + "; pass a t override for small instances");
    }
    long long xt_size = floor_rat(epsilon * n);
    if (xt_size < 1) throw std::invalid_argument("floor(eps*n) must be at least 1");

    auto adj = cube_adjacency(f);
    auto colors = color_cube(adj, static_cast<int>(std::min<long long>(t - 1, n)));
    if (!colors && t_override) {
        // the override is a floor, not an exact value: a denser pattern gets
        // however many classes its shadow-cube needs
        colors = dsatur_color(adj, n);
        if (colors) {
            int used = 0;
            for (int v = 1; v <= n; ++v) used = std::max(used, (*colors)[v] + 1);
            t = used + 1;
        }
    }
    if (!colors)
        throw std::runtime_error("could not color the shadow-cube with t-1 = " + std::to_string(t - 1) +
                                 " colors");
    std::vector<std::vector<int>> classes_by_color(t - 1);
    for (int v = 1; v <= n; ++v) classes_by_color[(*colors)[v]].push_back(v);
    std::stable_sort(classes_by_color.begin(), classes_by_color.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a < b;
                     });

    auto& largest = classes_by_color.back();
    std::map<std::string, std::vector<int>> by_profile;
    for (int v : largest) by_profile[prof[v].key].push_back(v);
    const std::vector<int>* best = nullptr;
    for (const auto& [key, members] : by_profile)
        if (!best || members.size() > best->size()) best = &members;
    if (!best || static_cast<long long>(best->size()) < xt_size) {
        std::string sizes;
        for (const auto& [key, members] : by_profile) {
            if (!sizes.empty()) sizes += ", ";
            sizes += std::to_string(members.size());
        }
        throw std::runtime_error("no profile class of size " + std::to_string(xt_size) +
                                 " in the largest color class; available class sizes: " + sizes);
    }

    EmbedPartition ep;
    ep.t = static_cast<int>(t);
    ep.epsilon = epsilon;
    ep.classes.assign(t + 1, {});
    ep.classes[t].assign(best->begin(), best->begin() + xt_size);
    ep.profile = prof[ep.classes[t].front()];

    std::vector<char> in_xt(n + 1, 0), in_x0(n + 1, 0);
    for (int x : ep.classes[t]) in_xt[x] = 1;
    for (int x : ep.classes[t]) {
        auto dist = bfs_distances(f, x, 1);
        for (int u = 1; u <= n; ++u)
            if (dist[u] == 1) {
                if (in_xt[u]) throw std::logic_error("X_t is not independent");
                in_x0[u] = 1;
            }
    }
    for (int v = 1; v <= n; ++v)
        if (in_x0[v]) ep.classes[0].push_back(v);

    for (long long i = 1; i <= t - 1; ++i)
        for (int v : classes_by_color[i - 1])
            if (!in_x0[v] && !in_xt[v]) ep.classes[i].push_back(v);

    validate_embed_partition(f, ep);
    return ep;
}

HostPartition make_host_partition(int n, int t, const Rational& epsilon) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (t < 1) throw std::invalid_argument("need t >= 1");
    if (epsilon <= 0 || epsilon > 1) throw std::invalid_argument("epsilon must lie in (0,1]");
    long long si = floor_rat(epsilon * n / (10 * t));
    HostPartition hp;
    hp.n = n;
    hp.t = t;
    hp.epsilon = epsilon;
    hp.classes.assign(t + 1, {});
    long long v0_end = n - t * si;
    for (long long v = 1; v <= v0_end; ++v) hp.classes[0].push_back(static_cast<int>(v));
    for (int i = 1; i <= t; ++i)
        for (long long v = v0_end + (i - 1) * si + 1; v <= v0_end + i * si; ++v)
            hp.classes[i].push_back(static_cast<int>(v));
    return hp;
}

void validate_host_partition(const HostPartition& hp) {
    if (hp.n < 1 || hp.t < 1) throw std::invalid_argument("bad host partition dimensions");
    if (hp.epsilon <= 0 || hp.epsilon > 1) throw std::invalid_argument("epsilon must lie in (0,1]");
    if (static_cast<int>(hp.classes.size()) != hp.t + 1)
        throw std::invalid_argument("host partition must have t+1 classes");
    long long si = floor_rat(hp.epsilon * hp.n / (10 * hp.t));
    std::vector<char> seen(hp.n + 1, 0);
    for (int i = 0; i <= hp.t; ++i) {
        if (i >= 1 && static_cast<long long>(hp.classes[i].size()) != si)
            throw std::invalid_argument("|V_" + std::to_string(i) + "| must be " + std::to_string(si));
        for (int v : hp.classes[i]) {
            if (v < 1 || v > hp.n || seen[v]) throw std::invalid_argument("host classes must partition 1..n");
            seen[v] = 1;
        }
    }
    for (int v = 1; v <= hp.n; ++v)
        if (!seen[v]) throw std::invalid_argument("host classes must cover 1..n");
}

AuxBipartite build_aux(const Hypergraph& h, const std::vector<std::vector<std::vector<int>>>& lfamily,
                       const std::vector<int>& w) {
    AuxBipartite b;
    std::set<std::vector<int>> all_sets;
    std::vector<char> left_vertex(h.n() + 1, 0);
    for (const auto& collection : lfamily) {
        std::vector<std::vector<int>> norm;
        std::set<std::vector<int>> inside;
        for (const auto& s : collection) {
            if (static_cast<int>(s.size()) != h.r() - 1)
                throw std::invalid_argument("collections must consist of (r-1)-sets");
            std::vector<int> sorted(s);
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                if (sorted[i] < 1 || sorted[i] > h.n())
                    throw std::invalid_argument("set vertex out of range");
                if (i && sorted[i] == sorted[i - 1])
                    throw std::invalid_argument("set vertices must be distinct");
            }
            if (!inside.insert(sorted).second)
                throw std::invalid_argument("a collection repeats a set");
            if (!all_sets.insert(sorted).second)
                throw std::invalid_argument("collections must be pairwise disjoint");
            for (int v : sorted) left_vertex[v] = 1;
            norm.push_back(std::move(sorted));
        }
        std::sort(norm.begin(), norm.end());
        b.left.push_back(std::move(norm));
    }
    std::set<int> wseen;
    for (int v : w) {
        if (v < 1 || v > h.n()) throw std::invalid_argument("right vertex out of range");
        if (!wseen.insert(v).second) throw std::invalid_argument("right vertices must be distinct");
        if (left_vertex[v])
            throw std::invalid_argument("right vertex " + std::to_string(v) + " appears in a collection");
    }
    b.right = w;
    b.adj.resize(b.left.size());
    for (std::size_t i = 0; i < b.left.size(); ++i)
        for (std::size_t j = 0; j < b.right.size(); ++j)
            if (member_adjacent(h, b.left[i], b.right[j])) b.adj[i].push_back(static_cast<int>(j));
    return b;
}

namespace {

bool kuhn_augment(const AuxBipartite& b, int u, std::vector<char>& vis, std::vector<int>& ml,
                  std::vector<int>& mr) {
    for (int v : b.adj[u]) {
        if (vis[v]) continue;
        vis[v] = 1;
        if (mr[v] == -1 || kuhn_augment(b, mr[v], vis, ml, mr)) {
            ml[u] = v;
            mr[v] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

MatchResult max_bipartite_matching(const AuxBipartite& b) {
    int nl = static_cast<int>(b.left.size());
    int nr = static_cast<int>(b.right.size());
    std::vector<int> ml(nl, -1), mr(nr, -1);
    for (int u = 0; u < nl; ++u) {
        std::vector<char> vis(nr, 0);
        kuhn_augment(b, u, vis, ml, mr);
    }
    MatchResult res;
    res.pairs = ml;
    int unmatched = -1;
    for (int u = 0; u < nl; ++u)
        if (ml[u] == -1) unmatched = u;
    if (unmatched == -1) {
        res.saturating = true;
        return res;
    }
    // alternating reachability from one unmatched left vertex gives U with
    // |N(U)| = |U| - 1
    std::vector<char> inu(nl, 0), seen_r(nr, 0);
    std::vector<int> queue{unmatched};
    inu[unmatched] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int v : b.adj[u]) {
            if (seen_r[v]) continue;
            seen_r[v] = 1;
            if (mr[v] != -1 && !inu[mr[v]]) {
                inu[mr[v]] = 1;
                queue.push_back(mr[v]);
            }
        }
    }
    for (int u = 0; u < nl; ++u)
        if (inu[u]) res.violator.push_back(u);
    return res;
}

namespace {

struct GoodnessContext {
    const Hypergraph& host;
    const HostPartition& hp;
    double p;
    int delta;
    const GoodnessOptions& opts;
    long long en;
};

long long size_cap(double p, int k) {
    double cap = std::pow(p / 2.0, -k) / 2.0;
    if (cap > 1e18) return std::numeric_limits<long long>::max() / 4;
    return static_cast<long long>(cap);
}

void check_property1(const GoodnessContext& ctx, const std::vector<std::vector<std::vector<int>>>& f2,
                     PropertyReport& rep) {
    const Hypergraph& host = ctx.host;
    std::vector<char> in_f2(host.n() + 1, 0);
    for (const auto& member : f2)
        for (const auto& s : member)
            for (int v : s) in_f2[v] = 1;
    std::vector<int> universe;
    for (int v = 1; v <= host.n(); ++v)
        if (!in_f2[v]) universe.push_back(v);
    long long cap = std::min<long long>(size_cap(ctx.p, ctx.delta), universe.size());
    if (cap < 1 || f2.empty()) {
        rep.vacuous = true;
        return;
    }
    // adjacency of every family member to every candidate vertex
    std::vector<std::vector<char>> adm(f2.size(), std::vector<char>(host.n() + 1, 0));
    for (std::size_t m = 0; m < f2.size(); ++m)
        for (int v : universe) adm[m][v] = member_adjacent(host, f2[m], v) ? 1 : 0;
    double factor = std::pow(ctx.p / 2.0, ctx.delta) * ctx.en / 4.0;
    auto neighbours = [&](const std::vector<int>& w) {
        long long cnt = 0;
        for (std::size_t m = 0; m < f2.size(); ++m)
            for (int v : w)
                if (adm[m][v]) {
                    ++cnt;
                    break;
                }
        return cnt;
    };
    if (ctx.opts.mode == GoodnessMode::Exhaustive) {
        BigInt total = 0;
        for (long long s = 1; s <= cap; ++s) total += big_binomial(static_cast<int>(universe.size()), static_cast<int>(s));
        if (total > BigInt(2000000))
            throw std::runtime_error("exhaustive mode infeasible: the first property would enumerate " +
                                     total.str() + " vertex sets");
        for_each_subset_up_to(universe, static_cast<int>(cap), [&](const std::vector<int>& w) {
            ++rep.checked;
            if (neighbours(w) + 1e-9 < factor * static_cast<double>(w.size())) {
                rep.holds = false;
                rep.witness = "W={" + join_ints(w) + "}: " + std::to_string(neighbours(w)) +
                              " neighbours, need " + std::to_string(factor * w.size());
                return false;
            }
            return true;
        });
    } else {
        std::vector<std::uint8_t> ok(ctx.opts.samples, 1);
        parallel_for(ctx.opts.samples, ctx.opts.jobs, [&](std::size_t idx) {
            Rng rng(derive_seed(ctx.opts.seed, {0x70313ULL, idx}));
            std::size_t s = 1 + rng.next_below(cap);
            auto w = sample_vertices(rng, universe, s);
            ok[idx] = neighbours(w) + 1e-9 >= factor * static_cast<double>(w.size()) ? 1 : 0;
        });
        rep.checked = ctx.opts.samples;
        for (int idx = 0; idx < ctx.opts.samples; ++idx)
            if (!ok[idx]) {
                Rng rng(derive_seed(ctx.opts.seed, {0x70313ULL, static_cast<std::uint64_t>(idx)}));
                std::size_t s = 1 + rng.next_below(cap);
                auto w = sample_vertices(rng, universe, s);
                rep.holds = false;
                rep.witness = "W={" + join_ints(w) + "}: " + std::to_string(neighbours(w)) +
                              " neighbours, need " + std::to_string(factor * w.size());
                break;
            }
    }
}

// Enumerates families of pairwise disjoint k-element groups of subset
// indices (members keyed by their smallest index, ascending). fn returning
// false aborts the walk; the return value propagates the abort upward.
template <class Fn>
bool families_rec(int universe, int k, int max_members, std::vector<char>& used,
                  int min_start, std::vector<std::vector<int>>& family, Fn&& fn);

template <class Fn>
bool extend_member(int universe, int k, int max_members, std::vector<char>& used, int first,
                   int start, std::vector<int>& member, std::vector<std::vector<int>>& family,
                   Fn&& fn) {
    if (static_cast<int>(member.size()) == k) {
        family.push_back(member);
        bool go = families_rec(universe, k, max_members, used, first + 1, family, fn);
        family.pop_back();
        return go;
    }
    for (int j = start; j < universe; ++j) {
        if (used[j]) continue;
        used[j] = 1;
        member.push_back(j);
        bool go = extend_member(universe, k, max_members, used, first, j + 1, member, family, fn);
        member.pop_back();
        used[j] = 0;
        if (!go) return false;
    }
    return true;
}

template <class Fn>
bool families_rec(int universe, int k, int max_members, std::vector<char>& used,
                  int min_start, std::vector<std::vector<int>>& family, Fn&& fn) {
    if (!family.empty() && !fn(family)) return false;
    if (static_cast<int>(family.size()) == max_members) return true;
    for (int first = min_start; first < universe; ++first) {
        if (used[first]) continue;
        used[first] = 1;
        std::vector<int> member{first};
        bool go = extend_member(universe, k, max_members, used, first, first + 1, member, family, fn);
        used[first] = 0;
        if (!go) return false;
    }
    return true;
}

void check_property2(const GoodnessContext& ctx, PropertyReport& rep) {
    const Hypergraph& host = ctx.host;
    int r1 = host.r() - 1;
    if (ctx.opts.mode == GoodnessMode::Exhaustive) {
        for (int k = 1; k <= ctx.delta && rep.holds; ++k) {
            long long cap = size_cap(ctx.p, k);
            double factor = std::pow(ctx.p / 2.0, k) / 4.0;
            for (int i = 1; i <= ctx.hp.t && rep.holds; ++i) {
                const auto& vi = ctx.hp.classes[i];
                if (vi.empty()) continue;  // trivially holds against an empty class
                std::vector<char> in_vi(host.n() + 1, 0);
                for (int v : vi) in_vi[v] = 1;
                std::vector<int> pool;
                for (int v = 1; v <= host.n(); ++v)
                    if (!in_vi[v]) pool.push_back(v);
                auto subsets = all_small_subsets(pool, r1);
                int u = static_cast<int>(subsets.size());
                if (u < k) continue;
                // adjacency of each subset to each vertex of V_i
                std::vector<std::vector<char>> sadj(u, std::vector<char>(vi.size(), 0));
                std::vector<int> e;
                for (int si = 0; si < u; ++si)
                    for (std::size_t j = 0; j < vi.size(); ++j) {
                        e.assign(subsets[si].begin(), subsets[si].end());
                        e.insert(std::lower_bound(e.begin(), e.end(), vi[j]), vi[j]);
                        sadj[si][j] = host.has_edge(e) ? 1 : 0;
                    }
                long long max_members = std::min<long long>(cap, u / k);
                std::vector<char> used(u, 0);
                std::vector<std::vector<int>> family;
                long long guard = 0;
                families_rec(u, k, static_cast<int>(max_members), used, 0, family,
                             [&](const std::vector<std::vector<int>>& fam) {
                                 if (++guard > 2000000)
                                     throw std::runtime_error(
                                         "exhaustive mode infeasible: too many collections for the "
                                         "second property");
                                 ++rep.checked;
                                 long long covered = 0;
                                 for (std::size_t j = 0; j < vi.size(); ++j) {
                                     for (const auto& member : fam) {
                                         bool all = true;
                                         for (int si : member)
                                             if (!sadj[si][j]) {
                                                 all = false;
                                                 break;
                                             }
                                         if (all) {
                                             ++covered;
                                             break;
                                         }
                                     }
                                 }
                                 double need = factor * fam.size() * vi.size();
                                 if (covered + 1e-9 < need) {
                                     rep.holds = false;
                                     rep.witness = "k=" + std::to_string(k) + " i=" + std::to_string(i) +
                                                   " |L|=" + std::to_string(fam.size()) + ": " +
                                                   std::to_string(covered) + " covered, need " +
                                                   std::to_string(need);
                                     return false;
                                 }
                                 return true;
                             });
            }
        }
        if (rep.checked == 0 && rep.holds) rep.vacuous = true;
    } else {
        std::vector<std::uint8_t> ok(ctx.opts.samples, 1);
        auto run_sample = [&](std::size_t idx, bool build_witness) -> std::string {
            Rng rng(derive_seed(ctx.opts.seed, {0x70323ULL, idx}));
            int k = 1 + static_cast<int>(rng.next_below(ctx.delta));
            int i = 1 + static_cast<int>(rng.next_below(ctx.hp.t));
            const auto& vi = ctx.hp.classes[i];
            std::vector<char> in_vi(host.n() + 1, 0);
            for (int v : vi) in_vi[v] = 1;
            std::vector<int> pool;
            for (int v = 1; v <= host.n(); ++v)
                if (!in_vi[v]) pool.push_back(v);
            BigInt universe = big_binomial(static_cast<int>(pool.size()), r1);
            long long cap = size_cap(ctx.p, k);
            BigInt smax_big = universe / k;
            long long smax = smax_big > BigInt(cap) ? cap : smax_big.convert_to<long long>();
            if (smax < 1) return "";  // nothing admissible at this size
            long long s = 1 + static_cast<long long>(rng.next_below(smax));
            auto sets = sample_distinct_subsets(rng, pool, r1, static_cast<std::size_t>(s * k));
            long long covered = 0;
            for (int v : vi) {
                for (long long g = 0; g < s; ++g) {
                    bool all = true;
                    for (int j = 0; j < k; ++j)
                        if (!member_adjacent(host, {sets[g * k + j]}, v)) {
                            all = false;
                            break;
                        }
                    if (all) {
                        ++covered;
                        break;
                    }
                }
            }
            double need = std::pow(ctx.p / 2.0, k) * s * vi.size() / 4.0;
            if (covered + 1e-9 >= need) return "";
            if (!build_witness) return "x";
            return "k=" + std::to_string(k) + " i=" + std::to_string(i) + " |L|=" + std::to_string(s) +
                   ": " + std::to_string(covered) + " covered, need " + std::to_string(need);
        };
        parallel_for(ctx.opts.samples, ctx.opts.jobs,
                     [&](std::size_t idx) { ok[idx] = run_sample(idx, false).empty() ? 1 : 0; });
        rep.checked = ctx.opts.samples;
        for (int idx = 0; idx < ctx.opts.samples; ++idx)
            if (!ok[idx]) {
                rep.holds = false;
                rep.witness = run_sample(idx, true);
                break;
            }
    }
}

void check_property3(const GoodnessContext& ctx, PropertyReport& rep) {
    const Hypergraph& host = ctx.host;
    int n = host.n();
    int r1 = host.r() - 1;
    std::vector<int> feasible;
    std::vector<long long> needs;
    for (int k = 1; k <= ctx.delta; ++k) {
        double cprime = static_cast<double>(k) * (host.r() - 1) + 2.0;
        double raw = cprime * std::pow(ctx.p / 2.0, -k) * std::log(static_cast<double>(n));
        if (raw > 1e9) continue;
        long long need = static_cast<long long>(std::ceil(raw));
        if (need < 1) need = 1;
        if (need >= n) continue;
        if (big_binomial(n - static_cast<int>(need), r1) < BigInt(need) * k) continue;
        feasible.push_back(k);
        needs.push_back(need);
    }
    if (feasible.empty()) {
        rep.vacuous = true;
        return;
    }
    if (ctx.opts.mode == GoodnessMode::Exhaustive)
        throw std::runtime_error("exhaustive mode infeasible: the third property cannot be enumerated");
    std::vector<int> all(n);
    for (int v = 1; v <= n; ++v) all[v - 1] = v;
    std::vector<std::uint8_t> ok(ctx.opts.samples, 1);
    auto run_sample = [&](std::size_t idx, bool build_witness) -> std::string {
        Rng rng(derive_seed(ctx.opts.seed, {0x70333ULL, idx}));
        std::size_t which = rng.next_below(feasible.size());
        int k = feasible[which];
        long long need = needs[which];
        auto w = sample_vertices(rng, all, static_cast<std::size_t>(need));
        std::vector<char> in_w(n + 1, 0);
        for (int v : w) in_w[v] = 1;
        std::vector<int> pool;
        for (int v = 1; v <= n; ++v)
            if (!in_w[v]) pool.push_back(v);
        auto sets = sample_distinct_subsets(rng, pool, r1, static_cast<std::size_t>(need * k));
        for (long long g = 0; g < need; ++g)
            for (int v : w) {
                bool all_in = true;
                for (int j = 0; j < k; ++j)
                    if (!member_adjacent(host, {sets[g * k + j]}, v)) {
                        all_in = false;
                        break;
                    }
                if (all_in) return "";
            }
        if (!build_witness) return "x";
        return "k=" + std::to_string(k) + " |L|=|W|=" + std::to_string(need) + ": no edge";
    };
    parallel_for(ctx.opts.samples, ctx.opts.jobs,
                 [&](std::size_t idx) { ok[idx] = run_sample(idx, false).empty() ? 1 : 0; });
    rep.checked = ctx.opts.samples;
    for (int idx = 0; idx < ctx.opts.samples; ++idx)
        if (!ok[idx]) {
            rep.holds = false;
            rep.witness = run_sample(idx, true);
            break;
        }
}

}  // namespace

GoodnessReport check_goodness(const Hypergraph& host, const HostPartition& hp, const Hypergraph& f,
                              const EmbedPartition& ep, double p, int delta,
                              const GoodnessOptions& opts) {
    validate_host_partition(hp);
    validate_embed_partition(f, ep);
    if (hp.n != host.n()) throw std::invalid_argument("host partition size mismatch");
    if (hp.t != ep.t) throw std::invalid_argument("host and pattern partitions use different t");
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0,1]");
    if (delta < 1 || f.max_degree() > delta) throw std::invalid_argument("delta below pattern max degree");
    if (host.r() != f.r()) throw std::invalid_argument("uniformity mismatch");
    if (opts.samples < 1 && opts.mode == GoodnessMode::Sampled)
        throw std::invalid_argument("sampled mode needs samples >= 1");

    GoodnessReport rep;
    rep.copies_needed = static_cast<int>(ep.classes[ep.t].size());
    GoodnessContext ctx{host, hp, p, delta, opts, rep.copies_needed};

    auto placement = place_profile_copies(host, hp.classes[0], f, ep, opts.seed, opts.budget);
    if (placement.status != SearchStatus::Found) {
        rep.p1.holds = false;
        rep.p1.witness = std::string("no family of ") + std::to_string(rep.copies_needed) +
                         " disjoint profile copies found in V_0 (" +
                         (placement.status == SearchStatus::NotFound ? "search space exhausted"
                                                                     : "budget exhausted") +
                         ")";
    } else {
        rep.copies_found = true;
        check_property1(ctx, placement.f2, rep.p1);
    }
    check_property2(ctx, rep.p2);
    check_property3(ctx, rep.p3);
    rep.all_hold = rep.p1.holds && rep.p2.holds && rep.p3.holds;
    return rep;
}

namespace {

EmbedTrace embed_pass(const Hypergraph& host, const Hypergraph& f, const HostPartition& hp,
                      const EmbedPartition& ep, std::uint64_t seed, std::uint64_t budget) {
    EmbedTrace trace;
    int t = ep.t;
    std::vector<int> phi(f.n() + 1, 0);
    std::vector<char> used(host.n() + 1, 0), allowed(host.n() + 1, 0);
    for (int v : hp.classes[0]) allowed[v] = 1;

    StageRecord s0;
    s0.stage = 0;
    s0.demand = static_cast<int>(ep.classes[0].size());
    s0.available = static_cast<int>(hp.classes[0].size());
    s0.slack = s0.available - s0.demand;
    auto placement = place_profile_copies(host, hp.classes[0], f, ep, seed, budget);
    s0.matched = placement.status == SearchStatus::Found;
    trace.stages.push_back(s0);
    if (!s0.matched) {
        trace.failure = std::string("stage 0: disjoint copy placement failed (") +
                        (placement.status == SearchStatus::NotFound ? "NotFound" : "BudgetExhausted") +
                        ")";
        return trace;
    }
    for (int v : ep.classes[0]) {
        phi[v] = placement.phi[v];
        used[phi[v]] = 1;
    }

    Rational en_exact = ep.epsilon * f.n();
    bool conformant = is_integral(en_exact);
    Rational slack_bound = Rational(9, 10) * en_exact;

    for (int i = 1; i <= t; ++i) {
        for (int v : hp.classes[i]) allowed[v] = 1;
        const auto& xi = ep.classes[i];
        std::vector<std::vector<std::vector<int>>> lfamily;
        std::set<std::vector<int>> disjointness;
        for (int x : xi) {
            std::vector<std::vector<int>> collection;
            for (const auto& s : link(f, x)) {
                bool ready = true;
                for (int v : s)
                    if (!phi[v]) ready = false;
                if (!ready) continue;
                std::vector<int> img;
                for (int v : s) img.push_back(phi[v]);
                std::sort(img.begin(), img.end());
                if (!disjointness.insert(img).second)
                    throw std::logic_error("link images of stage " + std::to_string(i) +
                                           " are not disjoint");
                collection.push_back(std::move(img));
            }
            std::sort(collection.begin(), collection.end());
            lfamily.push_back(std::move(collection));
        }
        std::vector<int> pool;
        for (int v = 1; v <= host.n(); ++v)
            if (allowed[v] && !used[v]) pool.push_back(v);
        Rng pool_rng(derive_seed(seed, {0x706f6f6cULL, static_cast<std::uint64_t>(i)}));
        for (std::size_t j = pool.size(); j > 1; --j)
            std::swap(pool[j - 1], pool[pool_rng.next_below(j)]);

        StageRecord rec;
        rec.stage = i;
        rec.demand = static_cast<int>(xi.size());
        rec.available = static_cast<int>(pool.size());
        rec.slack = rec.available - rec.demand;
        if (i <= t - 1 && conformant && Rational(rec.slack) < slack_bound)
            throw std::logic_error("slack identity violated at stage " + std::to_string(i) + ": " +
                                   std::to_string(rec.slack) + " < " + to_string(slack_bound));

        auto aux = build_aux(host, lfamily, pool);
        auto match = max_bipartite_matching(aux);
        rec.matched = match.saturating;
        if (!match.saturating)
            for (int u : match.violator) rec.hall_violator.push_back(xi[u]);
        trace.stages.push_back(rec);
        if (!match.saturating) {
            trace.failure = "stage " + std::to_string(i) + ": Hall violator of size " +
                            std::to_string(match.violator.size());
            return trace;
        }
        for (std::size_t u = 0; u < xi.size(); ++u) {
            int w = aux.right[match.pairs[u]];
            phi[xi[u]] = w;
            used[w] = 1;
        }
    }

    trace.embedding.mapping.resize(f.n());
    for (int v = 1; v <= f.n(); ++v) {
        if (!phi[v]) throw std::logic_error("vertex left unmapped after the final stage");
        trace.embedding.mapping[v - 1] = phi[v];
    }
    if (!validate_embedding(host, f, trace.embedding))
        throw std::logic_error("staged embedding failed validation");
    trace.success = true;
    return trace;
}

}  // namespace

EmbedTrace embed_universal(const Hypergraph& host, const Hypergraph& f, const HostPartition& hp,
                           const EmbedPartition& ep, std::uint64_t seed, std::uint64_t budget,
                           int attempts) {
    validate_embed_partition(f, ep);
    validate_host_partition(hp);
    if (host.r() != f.r()) throw std::invalid_argument("uniformity mismatch");
    if (f.n() != host.n()) throw std::invalid_argument("spanning embedding needs v(f) == v(host)");
    if (hp.n != host.n()) throw std::invalid_argument("host partition size mismatch");
    if (hp.t != ep.t) throw std::invalid_argument("host and pattern partitions use different t");
    if (attempts < 1) throw std::invalid_argument("need at least one attempt");

    EmbedTrace trace;
    for (int a = 0; a < attempts; ++a) {
        trace = embed_pass(host, f, hp, ep, derive_seed(seed, {0x656d62ULL, static_cast<std::uint64_t>(a)}),
                           budget);
        trace.attempts = a + 1;
        if (trace.success) break;
    }
    return trace;
}

}  // namespace spanhyper
