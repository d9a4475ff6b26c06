#include "spanhyper/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spanhyper/generators.hpp"
#include "spanhyper/parallel.hpp"
#include "spanhyper/rational.hpp"
#include "spanhyper/rng.hpp"
#include "spanhyper/subsets.hpp"

namespace spanhyper {

namespace {

// covering pairs of hyperedge e, lexicographic
std::vector<std::pair<int, int>> edge_pairs(const Hypergraph& f, int e) {
    auto span = f.edge(e);
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < span.size(); ++i)
        for (std::size_t j = i + 1; j < span.size(); ++j) out.emplace_back(span[i], span[j]);
    return out;
}

bool subset_has_edge(const Graph& g, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) return true;
    return false;
}

void cliques_rec(const Graph& g, int r, std::vector<int>& clique, const std::vector<int>& cands,
                 std::vector<int>& flat) {
    if (static_cast<int>(clique.size()) == r) {
        flat.insert(flat.end(), clique.begin(), clique.end());
        return;
    }
    // not enough candidates left to finish
    if (static_cast<int>(clique.size() + cands.size()) < r) return;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        int v = cands[i];
        std::vector<int> next;
        for (std::size_t j = i + 1; j < cands.size(); ++j)
            if (g.has_edge(v, cands[j])) next.push_back(cands[j]);
        clique.push_back(v);
        cliques_rec(g, r, clique, next, flat);
        clique.pop_back();
    }
}

// exhaustive search for a hitting graph with max degree <= cap: one covering
// pair per hyperedge, hyperedges already covered are skipped
struct PairSearch {
    const Hypergraph& f;
    int cap;
    std::uint64_t nodes;
    std::vector<int> deg;
    std::vector<std::vector<char>> adj;
    std::vector<std::pair<int, int>> chosen;

    PairSearch(const Hypergraph& f_, int cap_, std::uint64_t budget)
        : f(f_), cap(cap_), nodes(budget), deg(f_.n() + 1, 0),
          adj(f_.n() + 1, std::vector<char>(f_.n() + 1, 0)) {}

    bool run(int e) {
        if (e == f.edge_count()) return true;
        if (nodes == 0) throw std::runtime_error("hitting search budget exhausted");
        --nodes;
        auto pairs = edge_pairs(f, e);
        for (auto [a, b] : pairs)
            if (adj[a][b]) return run(e + 1);
        for (auto [a, b] : pairs) {
            if (deg[a] >= cap || deg[b] >= cap) continue;
            adj[a][b] = adj[b][a] = 1;
            ++deg[a];
            ++deg[b];
            chosen.emplace_back(a, b);
            if (run(e + 1)) return true;
            chosen.pop_back();
            adj[a][b] = adj[b][a] = 0;
            --deg[a];
            --deg[b];
        }
        return false;
    }
};

HittingGraph from_edges(const Hypergraph& f, const std::set<std::pair<int, int>>& present) {
    HittingGraph out;
    out.graph = Graph(f.n(), {present.begin(), present.end()});
    out.certificate.reserve(f.edge_count());
    for (int e = 0; e < f.edge_count(); ++e) {
        std::pair<int, int> cert{0, 0};
        for (auto pr : edge_pairs(f, e))
            if (present.count(pr)) {
                cert = pr;
                break;
            }
        if (cert.first == 0) throw std::logic_error("hyperedge left uncovered");
        out.certificate.push_back(cert);
    }
    return out;
}

}  // namespace

Hypergraph hr_construction(const Graph& g, int r) {
    if (r < 3) throw std::invalid_argument("uniformity r must be at least 3");
    if (g.n() < r) throw std::invalid_argument("need at least r vertices");
    std::vector<int> flat;
    auto s = first_subset(r);
    do {
        if (subset_has_edge(g, s)) flat.insert(flat.end(), s.begin(), s.end());
    } while (next_subset(s, g.n()));
    Hypergraph h(r, g.n(), std::move(flat));
    BigInt bound = BigInt(g.edge_count()) * pow(BigInt(g.n()), r - 2);
    if (BigInt(h.edge_count()) > bound) throw std::logic_error("edge count exceeds e * n^(r-2)");
    return h;
}

Hypergraph kr_construction(const Graph& g, int r) {
    if (r < 3) throw std::invalid_argument("uniformity r must be at least 3");
    std::vector<int> flat;
    std::vector<int> clique;
    std::vector<int> cands(g.n());
    for (int v = 1; v <= g.n(); ++v) cands[v - 1] = v;
    cliques_rec(g, r, clique, cands, flat);
    Hypergraph h(r, g.n(), std::move(flat));
    BigInt bound = BigInt(g.edge_count()) * pow(BigInt(g.max_degree()), r - 2);
    if (BigInt(h.edge_count()) > bound) throw std::logic_error("edge count exceeds e * max_degree^(r-2)");
    return h;
}

bool hits(const Graph& g, const Hypergraph& f) {
    if (g.n() < f.n()) return false;
    for (int e = 0; e < f.edge_count(); ++e) {
        auto span = f.edge(e);
        bool covered = false;
        for (std::size_t i = 0; i < span.size() && !covered; ++i)
            for (std::size_t j = i + 1; j < span.size() && !covered; ++j)
                if (g.has_edge(span[i], span[j])) covered = true;
        if (!covered) return false;
    }
    return true;
}

HittingGraph hitting_graph(const Hypergraph& f, std::uint64_t budget) {
    const int cap = f.max_degree();
    std::set<std::pair<int, int>> present;
    std::vector<int> deg(f.n() + 1, 0);

    // greedy: reuse an existing pair when possible, otherwise take the pair
    // with the smallest resulting endpoint load
    for (int e = 0; e < f.edge_count(); ++e) {
        auto pairs = edge_pairs(f, e);
        bool covered = false;
        for (auto pr : pairs)
            if (present.count(pr)) {
                covered = true;
                break;
            }
        if (covered) continue;
        std::pair<int, int> best = pairs[0];
        auto load = [&](std::pair<int, int> pr) {
            int a = deg[pr.first] + 1, b = deg[pr.second] + 1;
            return std::pair<int, int>{std::max(a, b), std::min(a, b)};
        };
        for (auto pr : pairs)
            if (load(pr) < load(best)) best = pr;
        present.insert(best);
        ++deg[best.first];
        ++deg[best.second];
    }

    // drop redundant edges until the graph is edge-minimal; a minimal
    // hitting graph has max degree at most the max degree of f, because
    // each kept edge owns a private hyperedge through both its endpoints
    bool removed = true;
    while (removed) {
        removed = false;
        for (auto it = present.begin(); it != present.end(); ++it) {
            bool needed = false;
            for (int e = 0; e < f.edge_count() && !needed; ++e) {
                auto pairs = edge_pairs(f, e);
                if (std::find(pairs.begin(), pairs.end(), *it) == pairs.end()) continue;
                bool other = false;
                for (auto pr : pairs)
                    if (pr != *it && present.count(pr)) {
                        other = true;
                        break;
                    }
                if (!other) needed = true;
            }
            if (!needed) {
                --deg[it->first];
                --deg[it->second];
                present.erase(it);
                removed = true;
                break;
            }
        }
    }

    if (*std::max_element(deg.begin(), deg.end()) > cap) {
        // unreachable for a minimal graph; kept as a guaranteed fallback
        PairSearch search(f, cap, budget);
        if (!search.run(0)) throw std::logic_error("no hitting graph within the degree bound");
        present = {search.chosen.begin(), search.chosen.end()};
    }

    HittingGraph out = from_edges(f, present);
    if (!hits(out.graph, f)) throw std::logic_error("constructed graph misses a hyperedge");
    if (out.graph.max_degree() > cap) throw std::logic_error("hitting graph exceeds the degree bound");
    return out;
}

int sigma_exact(const Hypergraph& f, std::uint64_t budget) {
    if (f.n() > 12) throw std::invalid_argument("exact search is limited to 12 vertices");
    if (f.edge_count() == 0) return 0;
    for (int k = 1; k <= f.max_degree(); ++k) {
        PairSearch search(f, k, budget);
        if (search.run(0)) return k;
    }
    throw std::logic_error("no hitting graph within the max degree of f");
}

double universality_lower_bound(long long n, int r, int delta) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (r < 1) throw std::invalid_argument("need r >= 1");
    if (delta < 1) throw std::invalid_argument("need delta >= 1");
    double exponent = static_cast<double>(r) - static_cast<double>(r) / delta;
    return std::pow(static_cast<double>(n), exponent);
}

UniversalityReport verify_universal_sampled(const Hypergraph& h, int n, int r, int delta,
                                            int samples, std::uint64_t seed, const Graph* base,
                                            std::uint64_t budget, int jobs) {
    if (h.r() != r) throw std::invalid_argument("uniformity mismatch");
    if (h.n() < n) throw std::invalid_argument("candidate has fewer than n vertices");
    if (n < r) throw std::invalid_argument("need n >= r");
    if (delta < 1) throw std::invalid_argument("need delta >= 1");
    if (samples < 1) throw std::invalid_argument("need samples >= 1");
    if (base && base->n() != h.n())
        throw std::invalid_argument("base graph and candidate differ in vertex count");

    Hypergraph base_h = base ? to_hypergraph(*base) : Hypergraph(2, 1, std::vector<int>{});

    UniversalityReport rep;
    rep.samples = samples;
    rep.detail.assign(samples, {});
    parallel_for(static_cast<std::size_t>(samples), jobs, [&](std::size_t idx) {
        auto f = sample_bounded_degree(n, r, delta, derive_seed(seed, {0x756e69ULL, idx}));
        UniversalitySample out;
        out.edges = f.edge_count();
        if (base) {
            // a shadow embedding into the base maps every pair inside a
            // hyperedge onto a base edge, so the image of each hyperedge is
            // an r-clique of the base and the same map embeds f into h
            auto sres = find_embedding(base_h, to_hypergraph(shadow(f)), false, budget);
            if (sres.status == SearchStatus::Found &&
                validate_embedding(h, f, sres.embedding)) {
                out.contained = true;
                out.lifted = true;
            }
        }
        if (!out.contained) {
            auto res = find_embedding(h, f, false, budget);
            if (res.status == SearchStatus::Found) {
                if (!validate_embedding(h, f, res.embedding))
                    throw std::logic_error("containment witness failed validation");
                out.contained = true;
            } else if (res.status == SearchStatus::BudgetExhausted) {
                out.budget_exhausted = true;
            }
        }
        rep.detail[idx] = out;
    });
    for (const auto& s : rep.detail)
        if (s.contained) ++rep.successes;
    rep.fraction = static_cast<double>(rep.successes) / samples;
    return rep;
}

}  // namespace spanhyper
