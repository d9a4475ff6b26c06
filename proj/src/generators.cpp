#include "spanhyper/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spanhyper/rational.hpp"
#include "spanhyper/rng.hpp"
#include "spanhyper/subsets.hpp"

namespace spanhyper {

namespace {

void check_nr(int n, int r) {
    if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
    if (n < r) throw std::invalid_argument("need n >= r");
}

}  // namespace

Hypergraph gnp(int n, int r, double p, std::uint64_t seed) {
    check_nr(n, r);
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability p must lie in [0,1]");
    Rng rng(derive_seed(seed, {0x676e70ULL}));
    std::vector<int> flat;
    std::vector<int> s(r);
    for (int i = 0; i < r; ++i) s[i] = i + 1;
    do {
        if (rng.next_double() < p) flat.insert(flat.end(), s.begin(), s.end());
    } while (next_subset(s, n));
    return Hypergraph(r, n, std::move(flat));
}

Hypergraph gnm(int n, int r, std::uint64_t m, std::uint64_t seed) {
    check_nr(n, r);
    std::uint64_t total = binomial_u64(n, r);
    if (m > total)
        throw std::invalid_argument("m = " + std::to_string(m) + " exceeds the " + std::to_string(total) + " possible edges");
    // Floyd's uniform subset sampler over edge ranks.
    Rng rng(derive_seed(seed, {0x676e6dULL}));
    std::set<std::uint64_t> ranks;
    for (std::uint64_t j = total - m; j < total; ++j) {
        std::uint64_t t = rng.next_below(j + 1);
        if (!ranks.insert(t).second) ranks.insert(j);
    }
    std::vector<int> flat;
    flat.reserve(m * r);
    for (std::uint64_t rank : ranks) {
        auto e = unrank_subset(rank, n, r);
        flat.insert(flat.end(), e.begin(), e.end());
    }
    return Hypergraph(r, n, std::move(flat));
}

Graph gnp_graph(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("vertex count n must be at least 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability p must lie in [0,1]");
    Rng rng(derive_seed(seed, {0x676e7067ULL}));
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.next_double() < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Hypergraph complete_hypergraph(int n, int r) {
    check_nr(n, r);
    std::vector<int> flat;
    std::vector<int> s(r);
    for (int i = 0; i < r; ++i) s[i] = i + 1;
    do {
        flat.insert(flat.end(), s.begin(), s.end());
    } while (next_subset(s, n));
    return Hypergraph(r, n, std::move(flat));
}

Hypergraph hamilton_cycle(int n, int r, int ell) {
    check_nr(n, r);
    if (ell < 0 || ell >= r) throw std::invalid_argument("overlap ell must satisfy 0 <= ell < r");
    int step = r - ell;
    if (n % step != 0) throw std::invalid_argument("(r - ell) must divide n");
    if (ell >= 1 && n == r) throw std::invalid_argument("need n > r when ell >= 1");
    int m = n / step;
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(m) * r);
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < r; ++j) flat.push_back((k * step + j) % n + 1);
    return Hypergraph(r, n, std::move(flat));
}

Hypergraph cube_hypergraph(int r, int d) {
    if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
    if (d < 1) throw std::invalid_argument("dimension d must be at least 1");
    std::uint64_t n = 1;
    for (int t = 0; t < d; ++t) {
        n *= static_cast<std::uint64_t>(r);
        if (n > 1'000'000ULL) throw std::invalid_argument("cube has too many vertices");
    }
    std::vector<int> flat;
    std::vector<int> coords(d, 0);
    // For each free coordinate j and each assignment of the others, one edge.
    for (int j = 0; j < d; ++j) {
        std::fill(coords.begin(), coords.end(), 0);
        while (true) {
            if (coords[j] == 0) {
                // base encodes the fixed coordinates, digit 0 fastest-varying
                std::uint64_t base = 0;
                for (int t = 0; t < d; ++t) base = base * r + static_cast<std::uint64_t>(coords[d - 1 - t]);
                std::uint64_t unit = 1;
                for (int t = 0; t < j; ++t) unit *= static_cast<std::uint64_t>(r);
                for (int x = 0; x < r; ++x) flat.push_back(static_cast<int>(base + static_cast<std::uint64_t>(x) * unit) + 1);
            }
            int t = 0;
            while (t < d && ++coords[t] == r) coords[t++] = 0;
            if (t == d) break;
        }
    }
    return Hypergraph(r, static_cast<int>(n), std::move(flat));
}

Hypergraph lattice(int r, int k) {
    if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
    if (k < 2) throw std::invalid_argument("index k must be at least 2");
    int side = k - 2 + r;
    auto id = [side](int row, int col) { return (row - 1) * side + col; };
    std::vector<int> flat;
    for (int row = 1; row <= side; ++row)
        for (int col = 1; col + r - 1 <= side; ++col)
            for (int j = 0; j < r; ++j) flat.push_back(id(row, col + j));
    for (int col = 1; col <= side; ++col)
        for (int row = 1; row + r - 1 <= side; ++row)
            for (int j = 0; j < r; ++j) flat.push_back(id(row + j, col));
    return Hypergraph(r, side * side, std::move(flat));
}

Hypergraph sphere_apollonian(int n, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("sphere needs n >= 4");
    Rng rng(derive_seed(seed, {0x737068ULL}));
    std::vector<std::array<int, 3>> faces = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    for (int x = 5; x <= n; ++x) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(faces.size()));
        auto [a, b, c] = faces[j];
        faces[j] = {a, b, x};
        faces.push_back({a, c, x});
        faces.push_back({b, c, x});
    }
    std::vector<int> flat;
    flat.reserve(faces.size() * 3);
    for (auto& f : faces) flat.insert(flat.end(), f.begin(), f.end());
    return Hypergraph(3, n, std::move(flat));
}

bool validate_sphere(const Hypergraph& h) {
    if (static_cast<long long>(h.r() - 2) * h.edge_count() != 2LL * h.n() - 4) return false;
    std::map<std::pair<int, int>, int> cover;
    for (int i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) cover[{e[a], e[b]}]++;
    }
    for (const auto& [pair, c] : cover)
        if (c != 2) return false;
    return true;
}

Hypergraph power_hamilton_cycle(int n, int r, int i) {
    check_nr(n, r);
    if (i < 1) throw std::invalid_argument("power i must be at least 1");
    int w = r + i - 2;
    if (n <= 2 * w) throw std::invalid_argument("need n > 2(r+i-2)");
    std::vector<int> flat;
    std::vector<int> pick(r - 1);
    for (int v = 1; v <= n; ++v) {
        // v plus any r-1 of the w vertices following it cyclically; since
        // n > 2w the leftmost vertex of each edge is unique.
        for (int t = 0; t < r - 1; ++t) pick[t] = t + 1;
        while (true) {
            flat.push_back(v);
            for (int t = 0; t < r - 1; ++t) flat.push_back((v - 1 + pick[t]) % n + 1);
            if (!next_subset(pick, w)) break;
        }
    }
    return Hypergraph(r, n, std::move(flat));
}

Hypergraph kfactor(int n, int r, int t) {
    check_nr(n, r);
    if (t < r) throw std::invalid_argument("block size t must be at least r");
    if (n % t != 0) throw std::invalid_argument("t must divide n");
    std::vector<int> flat;
    std::vector<int> s(r);
    for (int b = 0; b < n / t; ++b) {
        for (int i2 = 0; i2 < r; ++i2) s[i2] = i2 + 1;
        do {
            for (int x : s) flat.push_back(b * t + x);
        } while (next_subset(s, t));
    }
    return Hypergraph(r, n, std::move(flat));
}

Hypergraph sample_bounded_degree(int n, int r, int delta, std::uint64_t seed,
                                 std::uint64_t rejection_budget) {
    check_nr(n, r);
    if (delta < 0) throw std::invalid_argument("delta must be nonnegative");
    if (rejection_budget == 0)
        rejection_budget = 50ULL * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(std::max(delta, 1));
    Rng rng(derive_seed(seed, {0x626464ULL}));
    std::set<std::vector<int>> edges;
    std::vector<int> deg(n + 1, 0);
    std::vector<int> pool(n);
    std::uint64_t rejections = 0;
    while (rejections < rejection_budget) {
        for (int i = 0; i < n; ++i) pool[i] = i + 1;
        std::vector<int> e(r);
        for (int i = 0; i < r; ++i) {
            std::uint64_t j = i + rng.next_below(static_cast<std::uint64_t>(n - i));
            std::swap(pool[i], pool[j]);
            e[i] = pool[i];
        }
        std::sort(e.begin(), e.end());
        bool ok = std::all_of(e.begin(), e.end(), [&](int v) { return deg[v] < delta; });
        if (ok && edges.insert(e).second) {
            for (int v : e) deg[v]++;
        } else {
            ++rejections;
        }
    }
    std::vector<int> flat;
    flat.reserve(edges.size() * r);
    for (const auto& e : edges) flat.insert(flat.end(), e.begin(), e.end());
    return Hypergraph(r, n, std::move(flat));
}

}  // namespace spanhyper
