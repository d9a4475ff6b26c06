#include "spanhyper/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "spanhyper/generators.hpp"
#include "spanhyper/parallel.hpp"
#include "spanhyper/rng.hpp"

namespace spanhyper {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (int x : v) h = mix_u64(h ^ static_cast<std::uint64_t>(x));
        return static_cast<std::size_t>(h);
    }
};

// Connected, max-degree-first assignment order: prefer vertices sharing an
// edge with the ordered prefix, then higher degree, then smaller id.
std::vector<int> assignment_order(const Hypergraph& pattern) {
    int n = pattern.n();
    std::vector<char> placed(n + 1, 0), frontier(n + 1, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = 0;
        bool best_front = false;
        for (int v = 1; v <= n; ++v) {
            if (placed[v]) continue;
            bool fr = frontier[v] != 0;
            if (best == 0 || (fr && !best_front) ||
                (fr == best_front && pattern.degree(v) > pattern.degree(best))) {
                best = v;
                best_front = fr;
            }
        }
        placed[best] = 1;
        order.push_back(best);
        for (int e : pattern.incident_edges(best))
            for (int w : pattern.edge(e))
                if (!placed[w]) frontier[w] = 1;
    }
    return order;
}

struct EmbedSearch {
    const Hypergraph& host;
    const Hypergraph& pattern;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<int> order;                       // position -> pattern vertex
    std::vector<std::vector<int>> anchor_edges;   // position -> edges completed there
    std::unordered_map<std::vector<int>, std::vector<int>, VecHash> completions;
    std::vector<int> image;  // pattern vertex -> host vertex, 0 if unassigned
    std::vector<char> used;  // host vertex already taken

    EmbedSearch(const Hypergraph& h, const Hypergraph& p, std::uint64_t b)
        : host(h), pattern(p), budget(b), order(assignment_order(p)),
          anchor_edges(p.n()), image(p.n() + 1, 0), used(h.n() + 1, 0) {
        std::vector<int> pos(p.n() + 1, 0);
        for (int k = 0; k < p.n(); ++k) pos[order[k]] = k;
        for (int e = 0; e < p.edge_count(); ++e) {
            int last = 0;
            for (int w : p.edge(e)) last = std::max(last, pos[w]);
            anchor_edges[last].push_back(e);
        }
        if (p.edge_count() > 0) {
            std::vector<int> key;
            for (int e = 0; e < h.edge_count(); ++e) {
                auto edge = h.edge(e);
                key.assign(edge.begin(), edge.end());
                for (int i = 0; i < h.r(); ++i) {
                    int out = key[i];
                    key.erase(key.begin() + i);
                    completions[key].push_back(out);
                    key.insert(key.begin() + i, out);
                }
            }
        }
    }

    bool attempt(std::size_t k, int v, int x) {
        if (used[x] || host.degree(x) < pattern.degree(v)) return false;
        if (nodes >= budget) {
            exhausted = true;
            return false;
        }
        ++nodes;
        std::vector<int> img;
        for (int e : anchor_edges[k]) {
            img.clear();
            for (int w : pattern.edge(e)) img.push_back(w == v ? x : image[w]);
            std::sort(img.begin(), img.end());
            if (!host.has_edge(img)) return false;
        }
        image[v] = x;
        used[x] = 1;
        bool ok = dfs(k + 1);
        if (!ok) {
            used[x] = 0;
            image[v] = 0;
        }
        return ok;
    }

    bool dfs(std::size_t k) {
        if (k == order.size()) return true;
        int v = order[k];
        if (!anchor_edges[k].empty()) {
            int e0 = anchor_edges[k][0];
            std::vector<int> part;
            for (int w : pattern.edge(e0))
                if (w != v) part.push_back(image[w]);
            std::sort(part.begin(), part.end());
            auto it = completions.find(part);
            if (it == completions.end()) return false;
            for (int x : it->second) {
                if (attempt(k, v, x)) return true;
                if (exhausted) return false;
            }
            return false;
        }
        for (int x = 1; x <= host.n(); ++x) {
            if (attempt(k, v, x)) return true;
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace

SearchResult find_embedding(const Hypergraph& host, const Hypergraph& pattern, bool spanning,
                            std::uint64_t budget) {
    if (host.r() != pattern.r()) throw std::invalid_argument("host and pattern uniformity differ");
    if (pattern.n() > host.n()) throw std::invalid_argument("pattern has more vertices than host");
    if (spanning && pattern.n() != host.n())
        throw std::invalid_argument("spanning embedding needs v(pattern) == v(host)");
    EmbedSearch search(host, pattern, budget);
    SearchResult result;
    bool found = search.dfs(0);
    result.nodes = search.nodes;
    if (found) {
        result.status = SearchStatus::Found;
        result.embedding.mapping.resize(pattern.n());
        for (int v = 1; v <= pattern.n(); ++v) result.embedding.mapping[v - 1] = search.image[v];
    } else {
        result.status = search.exhausted ? SearchStatus::BudgetExhausted : SearchStatus::NotFound;
    }
    return result;
}

bool validate_embedding(const Hypergraph& host, const Hypergraph& pattern, const Embedding& emb) {
    if (host.r() != pattern.r()) return false;
    if (static_cast<int>(emb.mapping.size()) != pattern.n()) return false;
    std::set<int> seen;
    for (int x : emb.mapping) {
        if (x < 1 || x > host.n()) return false;
        if (!seen.insert(x).second) return false;
    }
    std::vector<int> img;
    for (int e = 0; e < pattern.edge_count(); ++e) {
        img.clear();
        for (int w : pattern.edge(e)) img.push_back(emb.mapping[w - 1]);
        std::sort(img.begin(), img.end());
        if (!host.has_edge(img)) return false;
    }
    return true;
}

std::pair<double, double> wilson_interval(int successes, int trials) {
    if (trials < 1) throw std::invalid_argument("wilson_interval needs trials >= 1");
    if (successes < 0 || successes > trials)
        throw std::invalid_argument("successes out of range");
    const double z = 1.959963984540054;  // 97.5th normal quantile
    double nn = trials;
    double ph = successes / nn;
    double z2 = z * z;
    double denom = 1.0 + z2 / nn;
    double center = (ph + z2 / (2.0 * nn)) / denom;
    double half = (z / denom) * std::sqrt(ph * (1.0 - ph) / nn + z2 / (4.0 * nn * nn));
    // clamp into [0,1] and force the bracket despite rounding at the endpoints
    double low = std::min(std::max(0.0, center - half), ph);
    double high = std::max(std::min(1.0, center + half), ph);
    return {low, high};
}

ThresholdCurve monte_carlo_curve(const Hypergraph& pattern, const std::string& family,
                                 const std::vector<double>& p_grid, int trials, std::uint64_t seed,
                                 std::uint64_t budget, int jobs, bool coupled) {
    if (trials < 1) throw std::invalid_argument("need trials >= 1");
    for (double p : p_grid)
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("grid probability out of [0,1]");
    int n = pattern.n();
    int r = pattern.r();
    std::size_t count = p_grid.size() * static_cast<std::size_t>(trials);
    std::vector<std::uint8_t> outcome(count, 0);
    parallel_for(count, jobs, [&](std::size_t idx) {
        std::size_t pi = idx / trials;
        std::uint64_t t = idx % trials;
        std::uint64_t host_seed = coupled ? derive_seed(seed, {0x637276ULL, 0, t})
                                          : derive_seed(seed, {0x637276ULL, pi + 1, t});
        auto host = gnp(n, r, p_grid[pi], host_seed);
        auto res = find_embedding(host, pattern, true, budget);
        outcome[idx] = res.status == SearchStatus::Found          ? 1
                       : res.status == SearchStatus::BudgetExhausted ? 2
                                                                     : 0;
    });
    ThresholdCurve curve;
    curve.family = family;
    curve.n = n;
    curve.r = r;
    curve.seed = seed;
    curve.coupled = coupled;
    curve.budget = budget;
    for (std::size_t pi = 0; pi < p_grid.size(); ++pi) {
        CurvePoint pt;
        pt.p = p_grid[pi];
        pt.trials = trials;
        for (int t = 0; t < trials; ++t) {
            std::uint8_t o = outcome[pi * trials + t];
            if (o == 1) ++pt.successes;
            if (o == 2) ++pt.budget_exhausted;
        }
        pt.phat = static_cast<double>(pt.successes) / trials;
        auto ci = wilson_interval(pt.successes, trials);
        pt.ci_low = ci.first;
        pt.ci_high = ci.second;
        curve.points.push_back(pt);
    }
    return curve;
}

}  // namespace spanhyper
