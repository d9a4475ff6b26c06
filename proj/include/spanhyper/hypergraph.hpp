#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spanhyper {

// r-uniform hypergraph on vertices 1..n. Edges are stored flat, each sorted
// ascending, the edge list sorted lexicographically, no duplicates. Immutable
// after construction; all queries are const and safe to share across threads.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int r, int n, const std::vector<std::vector<int>>& edge_list);
    // Takes ownership of a flat edge array (edge_count * r vertex ids).
    Hypergraph(int r, int n, std::vector<int> flat_edges);

    int r() const { return r_; }
    int n() const { return n_; }
    int edge_count() const { return m_; }

    std::span<const int> edge(int i) const {
        return {flat_.data() + static_cast<std::size_t>(i) * r_, static_cast<std::size_t>(r_)};
    }
    std::vector<std::vector<int>> edge_lists() const;

    int degree(int v) const { check_vertex(v); return inc_off_[v + 1] - inc_off_[v]; }
    int max_degree() const;
    std::span<const int> incident_edges(int v) const {
        check_vertex(v);
        return {inc_.data() + inc_off_[v], static_cast<std::size_t>(inc_off_[v + 1] - inc_off_[v])};
    }

    // sorted_set must be sorted ascending with r entries.
    bool has_edge(std::span<const int> sorted_set) const { return edge_index(sorted_set).has_value(); }
    std::optional<int> edge_index(std::span<const int> sorted_set) const;

    void check_vertex(int v) const {
        if (v < 1 || v > n_) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
    }

    bool operator==(const Hypergraph& o) const { return r_ == o.r_ && n_ == o.n_ && flat_ == o.flat_; }

private:
    void finish(std::vector<int> flat);

    int r_ = 0;
    int n_ = 0;
    int m_ = 0;
    std::vector<int> flat_;
    std::vector<int> inc_off_;  // CSR offsets, size n+2, slot 0 unused
    std::vector<int> inc_;      // edge ids grouped by vertex, ascending
};

// Simple graph on vertices 1..n; edges sorted pairs, adjacency lists sorted.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { check_vertex(v); return adj_[v]; }
    int degree(int v) const { check_vertex(v); return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    void check_vertex(int v) const {
        if (v < 1 || v > n_) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

Graph shadow(const Hypergraph& h);

Hypergraph to_hypergraph(const Graph& g);
Graph to_graph(const Hypergraph& h);  // requires r == 2

// Connected components of the shadow; a partition of 1..n, each class sorted,
// classes ordered by smallest member. Isolated vertices become singletons.
std::vector<std::vector<int>> components(const Hypergraph& h);

// BFS distances in the shadow from src; -1 for unreachable. If cap >= 0 the
// search stops after layer cap (deeper vertices report -1).
std::vector<int> bfs_distances(const Hypergraph& h, int src, int cap = -1);

std::optional<int> distance(const Hypergraph& h, int u, int v);

// True iff all pairs in verts have shadow distance >= t+1.
bool is_t_independent(const Hypergraph& h, const std::vector<int>& verts, int t);

// Link of v: all (r-1)-sets e\{v} over edges e containing v, sorted.
std::vector<std::vector<int>> link(const Hypergraph& h, int v);

// --- text format ---
// First non-comment line: "r n m". Then m lines of r strictly increasing
// vertex ids. '#' starts a comment. Duplicate edges are a parse error.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_number(line) {}
    int line_number;
};

Hypergraph parse_hypergraph(const std::string& text);
Hypergraph read_hypergraph_file(const std::string& path);
std::string format_hypergraph(const Hypergraph& h, const std::vector<std::string>& comment_lines = {});
// Writes atomically: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace spanhyper
