#include "spanhyper/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace spanhyper {

namespace {

bool edge_less(const int* a, const int* b, int r) {
    return std::lexicographical_compare(a, a + r, b, b + r);
}

bool edge_equal(const int* a, const int* b, int r) { return std::equal(a, a + r, b); }

}  // namespace

Hypergraph::Hypergraph(int r, int n, const std::vector<std::vector<int>>& edge_list) {
    r_ = r;
    n_ = n;
    std::vector<int> flat;
    flat.reserve(edge_list.size() * static_cast<std::size_t>(r > 0 ? r : 1));
    for (const auto& e : edge_list) {
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(r));
        flat.insert(flat.end(), e.begin(), e.end());
    }
    finish(std::move(flat));
}

Hypergraph::Hypergraph(int r, int n, std::vector<int> flat_edges) {
    r_ = r;
    n_ = n;
    if (r > 0 && flat_edges.size() % static_cast<std::size_t>(r) != 0)
        throw std::invalid_argument("flat edge array length not divisible by r");
    finish(std::move(flat_edges));
}

void Hypergraph::finish(std::vector<int> flat) {
    if (r_ < 2) throw std::invalid_argument("uniformity r must be at least 2");
    if (n_ < 1) throw std::invalid_argument("vertex count n must be at least 1");
    m_ = static_cast<int>(flat.size() / static_cast<std::size_t>(r_));

    for (int i = 0; i < m_; ++i) {
        int* e = flat.data() + static_cast<std::size_t>(i) * r_;
        std::sort(e, e + r_);
        if (e[0] < 1 || e[r_ - 1] > n_)
            throw std::invalid_argument("edge " + std::to_string(i) + " has a vertex outside 1.." + std::to_string(n_));
        for (int j = 1; j < r_; ++j)
            if (e[j] == e[j - 1])
                throw std::invalid_argument("edge " + std::to_string(i) + " repeats vertex " + std::to_string(e[j]));
    }

    std::vector<int> order(m_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return edge_less(flat.data() + static_cast<std::size_t>(a) * r_,
                         flat.data() + static_cast<std::size_t>(b) * r_, r_);
    });
    flat_.resize(flat.size());
    for (int i = 0; i < m_; ++i)
        std::copy_n(flat.data() + static_cast<std::size_t>(order[i]) * r_, r_,
                    flat_.data() + static_cast<std::size_t>(i) * r_);
    for (int i = 1; i < m_; ++i)
        if (edge_equal(flat_.data() + static_cast<std::size_t>(i - 1) * r_,
                       flat_.data() + static_cast<std::size_t>(i) * r_, r_))
            throw std::invalid_argument("duplicate edge");

    inc_off_.assign(n_ + 2, 0);
    for (int v : flat_) inc_off_[v + 1]++;
    for (int v = 1; v <= n_; ++v) inc_off_[v + 1] += inc_off_[v];
    inc_.resize(flat_.size());
    std::vector<int> cursor(inc_off_.begin(), inc_off_.end());
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < r_; ++j) inc_[cursor[flat_[static_cast<std::size_t>(i) * r_ + j]]++] = i;
}

std::vector<std::vector<int>> Hypergraph::edge_lists() const {
    std::vector<std::vector<int>> out(m_);
    for (int i = 0; i < m_; ++i) {
        auto e = edge(i);
        out[i].assign(e.begin(), e.end());
    }
    return out;
}

int Hypergraph::max_degree() const {
    int d = 0;
    for (int v = 1; v <= n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::optional<int> Hypergraph::edge_index(std::span<const int> sorted_set) const {
    if (static_cast<int>(sorted_set.size()) != r_) return std::nullopt;
    int lo = 0, hi = m_;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (edge_less(flat_.data() + static_cast<std::size_t>(mid) * r_, sorted_set.data(), r_))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < m_ && edge_equal(flat_.data() + static_cast<std::size_t>(lo) * r_, sorted_set.data(), r_))
        return lo;
    return std::nullopt;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 1) throw std::invalid_argument("vertex count n must be at least 1");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n) throw std::invalid_argument("edge vertex outside 1.." + std::to_string(n));
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edge_list);
    adj_.assign(n + 1, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 1; v <= n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

Graph shadow(const Hypergraph& h) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) pairs.emplace_back(e[a], e[b]);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Graph(h.n(), std::move(pairs));
}

Hypergraph to_hypergraph(const Graph& g) {
    std::vector<int> flat;
    flat.reserve(g.edges().size() * 2);
    for (auto [u, v] : g.edges()) {
        flat.push_back(u);
        flat.push_back(v);
    }
    return Hypergraph(2, g.n(), std::move(flat));
}

Graph to_graph(const Hypergraph& h) {
    if (h.r() != 2) throw std::invalid_argument("to_graph requires a 2-uniform hypergraph");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(h.edge_count());
    for (int i = 0; i < h.edge_count(); ++i) pairs.emplace_back(h.edge(i)[0], h.edge(i)[1]);
    return Graph(h.n(), std::move(pairs));
}

std::vector<std::vector<int>> components(const Hypergraph& h) {
    std::vector<int> comp(h.n() + 1, -1);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= h.n(); ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.push_back({});
        std::queue<int> q;
        comp[s] = id;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out[id].push_back(v);
            for (int ei : h.incident_edges(v))
                for (int w : h.edge(ei))
                    if (comp[w] == -1) {
                        comp[w] = id;
                        q.push(w);
                    }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

std::vector<int> bfs_distances(const Hypergraph& h, int src, int cap) {
    h.check_vertex(src);
    std::vector<int> dist(h.n() + 1, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (cap >= 0 && dist[v] >= cap) continue;
        for (int ei : h.incident_edges(v))
            for (int w : h.edge(ei))
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
    }
    return dist;
}

std::optional<int> distance(const Hypergraph& h, int u, int v) {
    h.check_vertex(v);
    auto d = bfs_distances(h, u);
    if (d[v] < 0) return std::nullopt;
    return d[v];
}

bool is_t_independent(const Hypergraph& h, const std::vector<int>& verts, int t) {
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    std::vector<char> in_set(h.n() + 1, 0);
    for (int v : verts) {
        h.check_vertex(v);
        if (in_set[v]) throw std::invalid_argument("repeated vertex " + std::to_string(v));
        in_set[v] = 1;
    }
    for (int v : verts) {
        auto dist = bfs_distances(h, v, t);
        for (int w = 1; w <= h.n(); ++w)
            if (w != v && in_set[w] && dist[w] >= 0 && dist[w] <= t) return false;
    }
    return true;
}

std::vector<std::vector<int>> link(const Hypergraph& h, int v) {
    std::vector<std::vector<int>> out;
    for (int ei : h.incident_edges(v)) {
        std::vector<int> s;
        s.reserve(h.r() - 1);
        for (int w : h.edge(ei))
            if (w != v) s.push_back(w);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace spanhyper
