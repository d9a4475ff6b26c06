#include "spanhyper/thresholds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "spanhyper/subsets.hpp"

namespace spanhyper {

namespace {

struct SubsetSearch {
    const Hypergraph& h;
    int target;                    // subset size v
    std::vector<int> order;        // vertices, descending degree
    std::vector<int> chosen_cnt;   // per edge: chosen vertices
    std::vector<int> dead_cnt;     // per edge: excluded vertices
    int best = 0;

    explicit SubsetSearch(const Hypergraph& hh, int v) : h(hh), target(v) {
        order.resize(h.n());
        std::iota(order.begin(), order.end(), 1);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return h.degree(a) > h.degree(b); });
        chosen_cnt.assign(h.edge_count(), 0);
        dead_cnt.assign(h.edge_count(), 0);
    }

    int upper_bound(std::size_t idx, int chosen, int cur) {
        int k = target - chosen;
        // edges that are neither dead nor complete can still be gained
        int alive = 0;
        for (int e = 0; e < h.edge_count(); ++e)
            if (dead_cnt[e] == 0 && chosen_cnt[e] < h.r()) ++alive;
        // each newly chosen vertex completes at most deg(v) edges
        int degsum = 0, taken = 0;
        for (std::size_t i = idx; i < order.size() && taken < k; ++i, ++taken)
            degsum += h.degree(order[i]);
        return cur + std::min(alive, degsum);
    }

    void run(std::size_t idx, int chosen, int cur) {
        if (chosen == target) {
            best = std::max(best, cur);
            return;
        }
        if (idx >= order.size()) return;
        if (static_cast<int>(order.size() - idx) < target - chosen) return;
        if (upper_bound(idx, chosen, cur) <= best) return;

        int v = order[idx];
        // include v
        int gained = 0;
        for (int e : h.incident_edges(v))
            if (++chosen_cnt[e] == h.r() && dead_cnt[e] == 0) ++gained;
        run(idx + 1, chosen + 1, cur + gained);
        for (int e : h.incident_edges(v)) --chosen_cnt[e];
        // exclude v
        for (int e : h.incident_edges(v)) ++dead_cnt[e];
        run(idx + 1, chosen, cur);
        for (int e : h.incident_edges(v)) --dead_cnt[e];
    }
};

}  // namespace

int e_sub(const Hypergraph& h, int v) {
    if (v < 0 || v > h.n()) throw std::invalid_argument("subset size out of range");
    if (v < h.r()) return 0;
    SubsetSearch s(h, v);
    s.run(0, 0, 0);
    return s.best;
}

DensityReport gamma(const Hypergraph& h) {
    if (h.n() < h.r() + 1) throw std::invalid_argument("density parameter needs n >= r+1");
    DensityReport rep;
    rep.e_sub_table.assign(h.n() + 1, 0);
    for (int v = h.r(); v <= h.n(); ++v) rep.e_sub_table[v] = e_sub(h, v);
    rep.gamma = 0;
    rep.argmax_v = h.r() + 1;
    for (int v = h.r() + 1; v <= h.n(); ++v) {
        Rational val(rep.e_sub_table[v], v - 2);
        if (val > rep.gamma) {
            rep.gamma = val;
            rep.argmax_v = v;
        }
    }
    rep.alpha = Rational(BigInt(h.edge_count()), big_binomial(h.n(), h.r()));
    return rep;
}

Rational gamma_closed_form_hamilton(int n, int r, int ell) {
    if (ell < 2 || ell >= r) throw std::invalid_argument("closed form requires 2 <= ell < r");
    if (n <= r || n % (r - ell) != 0) throw std::invalid_argument("invalid cycle parameters");
    return Rational(n, (r - ell) * (n - 2));
}

Rational gamma_closed_form_lattice(int r, int k) {
    if (r < 3 || k < 2) throw std::invalid_argument("invalid lattice parameters");
    return Rational(2);
}

Rational gamma_closed_form_sphere(int r) {
    if (r < 3) throw std::invalid_argument("sphere form requires r >= 3");
    return Rational(2, r - 2);
}

Rational gamma_closed_form_power(int r, int i) {
    if (r < 2 || i < 1) throw std::invalid_argument("invalid power parameters");
    return Rational(big_binomial(r + i - 2, r - 1));
}

double expectation_threshold(const Rational& gamma_value, int n) {
    if (gamma_value <= 0) throw std::invalid_argument("gamma must be positive");
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    return std::pow(static_cast<double>(n), -1.0 / to_double(gamma_value));
}

double sharp_threshold_regular(int n, int r, int delta) {
    if (delta < 1) throw std::invalid_argument("delta must be at least 1");
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    return std::pow(static_cast<double>(n), -static_cast<double>(r) / delta);
}

ConditionsReport check_riordan_conditions(const Hypergraph& h, double p,
                                          const std::optional<Rational>& gamma_override) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0,1]");
    ConditionsReport rep;
    BigInt total = big_binomial(h.n(), h.r());
    rep.alpha = Rational(BigInt(h.edge_count()), total);
    rep.lhs_first = Rational(h.edge_count());
    rep.rhs_first = Rational(h.n(), h.r());
    rep.slack_first = rep.lhs_first - rep.rhs_first;
    rep.holds_first = rep.lhs_first > rep.rhs_first;
    rep.growth_first = p * total.convert_to<double>();
    rep.gamma_value = gamma_override ? *gamma_override : gamma(h).gamma;
    rep.max_deg = h.max_degree();
    if (rep.max_deg == 0) {
        rep.value_second = std::numeric_limits<double>::infinity();
    } else {
        double pg = std::pow(p, to_double(rep.gamma_value));
        rep.value_second = h.n() * pg / std::pow(static_cast<double>(rep.max_deg), 4.0);
    }
    return rep;
}

Rational fractional_density_m1(const Hypergraph& h) {
    if (h.n() < h.r() || h.edge_count() == 0) return 0;
    Rational best = 0;
    for (int v = h.r(); v <= h.n(); ++v) {
        Rational val(e_sub(h, v), v - 1);
        best = std::max(best, val);
    }
    return best;
}

namespace {

// Backtracking count of edge-set-preserving vertex permutations.
struct AutSearch {
    const Hypergraph& h;
    std::vector<int> image;  // 1-based; 0 = unassigned
    std::vector<char> used;
    BigInt count = 0;

    explicit AutSearch(const Hypergraph& hh) : h(hh), image(hh.n() + 1, 0), used(hh.n() + 1, 0) {}

    bool consistent(int v) {
        // every edge through v with fully assigned vertices must map to an edge
        std::vector<int> img;
        for (int ei : h.incident_edges(v)) {
            auto e = h.edge(ei);
            img.clear();
            bool full = true;
            for (int w : e) {
                if (image[w] == 0) {
                    full = false;
                    break;
                }
                img.push_back(image[w]);
            }
            if (!full) continue;
            std::sort(img.begin(), img.end());
            if (!h.has_edge(img)) return false;
        }
        return true;
    }

    void run(int v) {
        if (v > h.n()) {
            ++count;
            return;
        }
        for (int w = 1; w <= h.n(); ++w) {
            if (used[w] || h.degree(w) != h.degree(v)) continue;
            image[v] = w;
            used[w] = 1;
            if (consistent(v)) run(v + 1);
            image[v] = 0;
            used[w] = 0;
        }
    }
};

}  // namespace

BigInt count_automorphisms(const Hypergraph& pattern) {
    AutSearch s(pattern);
    s.run(1);
    return s.count;
}

BigInt count_copies(const Hypergraph& pattern, int n) {
    if (n < pattern.n()) throw std::invalid_argument("host must have at least v(pattern) vertices");
    BigInt falling = 1;
    for (int i = 0; i < pattern.n(); ++i) falling *= (n - i);
    BigInt aut = count_automorphisms(pattern);
    BigInt copies = falling / aut;
    if (copies * aut != falling) throw std::logic_error("automorphism count does not divide the injection count");
    return copies;
}

std::vector<std::uint64_t> enumerate_copies(const Hypergraph& pattern, int n) {
    std::uint64_t total = binomial_u64(n, pattern.r());
    if (total > 64) throw std::invalid_argument("edge universe exceeds 64 slots");
    if (n < pattern.n()) throw std::invalid_argument("host must have at least v(pattern) vertices");

    std::set<std::uint64_t> masks;
    std::vector<int> image(pattern.n() + 1, 0);
    std::vector<char> used(n + 1, 0);
    std::vector<int> img;

    std::function<void(int)> rec = [&](int v) {
        if (v > pattern.n()) {
            std::uint64_t mask = 0;
            for (int ei = 0; ei < pattern.edge_count(); ++ei) {
                auto e = pattern.edge(ei);
                img.assign(e.begin(), e.end());
                for (auto& x : img) x = image[x];
                std::sort(img.begin(), img.end());
                mask |= 1ULL << rank_subset(img, n);
            }
            masks.insert(mask);
            return;
        }
        for (int w = 1; w <= n; ++w) {
            if (used[w]) continue;
            image[v] = w;
            used[w] = 1;
            rec(v + 1);
            used[w] = 0;
        }
    };
    rec(1);
    return std::vector<std::uint64_t>(masks.begin(), masks.end());
}

namespace {

// h(u) = C(N-u, m-u) / C(N, m): probability that u given edges all appear in
// the uniform m-edge host.
Rational edge_subset_probability(std::uint64_t N, int m, int u) {
    if (static_cast<std::uint64_t>(u) > static_cast<std::uint64_t>(m)) return 0;
    return Rational(big_binomial(static_cast<std::int64_t>(N) - u, m - u),
                    big_binomial(static_cast<std::int64_t>(N), m));
}

}  // namespace

SecondMomentReport second_moment_ratio(const Hypergraph& pattern, int n, int m) {
    SecondMomentReport rep;
    rep.n = n;
    rep.r = pattern.r();
    rep.m = m;
    rep.possible_edges = binomial_u64(n, pattern.r());
    if (m < 0 || static_cast<std::uint64_t>(m) > rep.possible_edges)
        throw std::invalid_argument("m out of range");
    rep.pattern_edges = pattern.edge_count();

    auto copies = enumerate_copies(pattern, n);
    rep.copy_count = BigInt(copies.size());

    for (auto mask : copies)
        if (std::popcount(mask) != rep.pattern_edges)
            throw std::logic_error("copy with wrong edge count");

    rep.ex = Rational(rep.copy_count) * edge_subset_probability(rep.possible_edges, m, rep.pattern_edges);
    rep.ex_positive = rep.ex > 0;

    // pair sum grouped by |E(A) union E(B)|
    std::vector<BigInt> pair_count(65, 0);
    for (auto a : copies)
        for (auto b : copies) pair_count[std::popcount(a | b)] += 1;
    rep.ex2 = 0;
    for (int u = 0; u <= 64; ++u)
        if (pair_count[u] != 0)
            rep.ex2 += Rational(pair_count[u]) * edge_subset_probability(rep.possible_edges, m, u);

    rep.ratio = rep.ex_positive ? rep.ex2 / (rep.ex * rep.ex) : Rational(0);
    return rep;
}

ChebyshevReport chebyshev_check(const Hypergraph& pattern, int n, int m) {
    ChebyshevReport rep;
    rep.moments = second_moment_ratio(pattern, n, m);
    std::uint64_t N = rep.moments.possible_edges;
    rep.hosts = big_binomial(static_cast<std::int64_t>(N), m);
    if (rep.hosts > 20'000'000) throw std::invalid_argument("too many hosts to enumerate");

    auto copies = enumerate_copies(pattern, n);
    BigInt zeros = 0, sum = 0, sum_sq = 0;
    if (m == 0) {
        // single empty host
        long long x = static_cast<long long>(std::count(copies.begin(), copies.end(), 0ULL));
        zeros = x == 0 ? 1 : 0;
        sum = x;
        sum_sq = x * x;
    } else {
        std::vector<int> host = first_subset(m);
        do {
            std::uint64_t mask = 0;
            for (int slot : host) mask |= 1ULL << (slot - 1);
            long long x = 0;
            for (auto c : copies)
                if ((c & mask) == c) ++x;
            if (x == 0) ++zeros;
            sum += x;
            sum_sq += x * x;
        } while (next_subset(host, static_cast<int>(N)));
    }

    rep.p_zero = Rational(zeros) / Rational(rep.hosts);
    rep.ex_enum = Rational(sum) / Rational(rep.hosts);
    rep.ex2_enum = Rational(sum_sq) / Rational(rep.hosts);
    rep.applicable = rep.moments.ex_positive;
    if (rep.applicable) {
        rep.bound = rep.moments.ratio - 1;
        rep.holds = rep.p_zero <= rep.bound;
    }
    return rep;
}

}  // namespace spanhyper
