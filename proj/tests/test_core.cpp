#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "spanhyper/generators.hpp"
#include "spanhyper/hypergraph.hpp"
#include "spanhyper/profile.hpp"
#include "spanhyper/rng.hpp"

using namespace spanhyper;

namespace {

Hypergraph relabelled(const Hypergraph& h, const std::vector<int>& perm) {
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edge_lists()) {
        std::vector<int> f;
        for (int v : e) f.push_back(perm[v]);
        edges.push_back(f);
    }
    return Hypergraph(h.r(), h.n(), edges);
}

std::vector<int> random_perm(int n, std::uint64_t seed) {
    std::vector<int> p(n + 1);
    std::iota(p.begin(), p.end(), 0);
    Rng rng(seed);
    for (int i = n; i >= 2; --i) std::swap(p[i], p[1 + static_cast<int>(rng.next_below(i))]);
    return p;
}

}  // namespace

TEST_CASE("construction validates and normalizes") {
    Hypergraph h(3, 5, std::vector<std::vector<int>>{{3, 2, 1}, {5, 4, 3}});
    CHECK(h.r() == 3);
    CHECK(h.n() == 5);
    CHECK(h.edge_count() == 2);
    CHECK(h.edge_lists() == std::vector<std::vector<int>>{{1, 2, 3}, {3, 4, 5}});
    CHECK(h.has_edge(std::vector<int>{1, 2, 3}));
    CHECK_FALSE(h.has_edge(std::vector<int>{1, 2, 4}));

    CHECK_THROWS_AS(Hypergraph(3, 5, std::vector<std::vector<int>>{{1, 2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 5, std::vector<std::vector<int>>{{1, 2, 6}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 5, std::vector<std::vector<int>>{{1, 2, 3}, {3, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(1, 5, std::vector<std::vector<int>>{}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 0, std::vector<std::vector<int>>{}), std::invalid_argument);
}

TEST_CASE("degree and incidence") {
    auto k4 = complete_hypergraph(4, 3);
    for (int v = 1; v <= 4; ++v) CHECK(k4.degree(v) == 3);
    CHECK(k4.max_degree() == 3);

    Hypergraph h(3, 6, std::vector<std::vector<int>>{{1, 2, 3}, {3, 4, 5}});
    CHECK(h.degree(3) == 2);
    CHECK(h.degree(6) == 0);
    CHECK_THROWS_AS(h.degree(7), std::out_of_range);

    int deg_sum = 0;
    for (int v = 1; v <= h.n(); ++v) deg_sum += h.degree(v);
    CHECK(deg_sum == h.r() * h.edge_count());
    for (int v = 1; v <= h.n(); ++v)
        for (int ei : h.incident_edges(v)) {
            auto e = h.edge(ei);
            CHECK(std::find(e.begin(), e.end(), v) != e.end());
        }
}

TEST_CASE("shadow") {
    Hypergraph two(3, 5, std::vector<std::vector<int>>{{1, 2, 3}, {3, 4, 5}});
    auto g = shadow(two);
    CHECK(g.edge_count() == 6);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(3, 5));
    CHECK_FALSE(g.has_edge(1, 4));

    // tight cycle: shadow connects vertices at cyclic distance <= 2
    auto c6 = hamilton_cycle(6, 3, 2);
    auto sg = shadow(c6);
    CHECK(sg.edge_count() == 12);
    CHECK(sg.has_edge(1, 3));
    CHECK_FALSE(sg.has_edge(1, 4));
}

TEST_CASE("components") {
    Hypergraph h(3, 7, std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}});
    auto comps = components(h);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{1, 2, 3});
    CHECK(comps[1] == std::vector<int>{4, 5, 6});
    CHECK(comps[2] == std::vector<int>{7});

    Hypergraph joined(3, 7, std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}, {3, 4, 7}});
    CHECK(components(joined).size() == 1);
}

TEST_CASE("distance") {
    auto c6 = hamilton_cycle(6, 3, 2);
    CHECK(distance(c6, 1, 4) == 2);
    CHECK(distance(c6, 1, 3) == 1);
    CHECK(distance(c6, 1, 1) == 0);

    Hypergraph split(3, 6, std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}});
    CHECK_FALSE(distance(split, 1, 5).has_value());
    CHECK(distance(split, 1, 2) == 1);

    // long loose path: distances grow along the chain
    Hypergraph path(3, 9, std::vector<std::vector<int>>{{1, 2, 3}, {3, 4, 5}, {5, 6, 7}, {7, 8, 9}});
    CHECK(distance(path, 1, 9) == 4);
    CHECK(distance(path, 2, 6) == 3);
}

TEST_CASE("t-independence") {
    auto c9 = hamilton_cycle(9, 3, 2);
    CHECK(is_t_independent(c9, {1, 4, 7}, 1));
    CHECK_FALSE(is_t_independent(c9, {1, 4, 7}, 2));
    CHECK(is_t_independent(c9, {1}, 100));
    CHECK(is_t_independent(c9, {}, 5));

    Hypergraph split(3, 6, std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}});
    CHECK(is_t_independent(split, {1, 4}, 1000));
    CHECK_FALSE(is_t_independent(split, {1, 2}, 1));
    CHECK_THROWS_AS(is_t_independent(split, {1, 1}, 1), std::invalid_argument);
}

TEST_CASE("link") {
    auto k4 = complete_hypergraph(4, 3);
    auto l = link(k4, 1);
    CHECK(l == std::vector<std::vector<int>>{{2, 3}, {2, 4}, {3, 4}});
    CHECK(link(k4, 2).size() == 3);

    Hypergraph h(3, 6, std::vector<std::vector<int>>{{1, 2, 3}, {1, 4, 5}});
    CHECK(link(h, 1) == std::vector<std::vector<int>>{{2, 3}, {4, 5}});
    CHECK(link(h, 6).empty());
}

TEST_CASE("profile of tight cycle vertices") {
    auto c8 = hamilton_cycle(8, 3, 2);
    auto p = profile(c8, 4);
    CHECK(p.center == 4);
    CHECK(p.zvertices == std::vector<int>{2, 3, 5, 6});
    CHECK(p.e1.empty());
    CHECK(p.e2 == std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}});

    auto c1 = canonical_profile(profile(c8, 1));
    for (int v = 2; v <= 8; ++v) CHECK(canonical_profile(profile(c8, v)) == c1);
}

TEST_CASE("profiles distinguish structural roles") {
    auto loose = hamilton_cycle(12, 3, 1);
    // odd vertices are shared between two edges, even vertices lie in one
    auto joint = canonical_profile(profile(loose, 1));
    auto middle = canonical_profile(profile(loose, 2));
    CHECK(joint.z == 4);
    CHECK(middle.z == 2);
    CHECK_FALSE(joint == middle);
    CHECK(canonical_profile(profile(loose, 3)) == joint);
    CHECK(canonical_profile(profile(loose, 4)) == middle);

    // K4 profiles carry induced edges: Z = 3 others, one induced edge, 3 links
    auto k4 = complete_hypergraph(4, 3);
    auto p = profile(k4, 2);
    CHECK(p.zvertices == std::vector<int>{1, 3, 4});
    CHECK(p.e1 == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(p.e2.size() == 3);
}

TEST_CASE("canonical profile is invariant under relabelling") {
    auto samples = {hamilton_cycle(10, 3, 1), hamilton_cycle(8, 3, 2), complete_hypergraph(5, 3),
                    sample_bounded_degree(12, 3, 2, 99)};
    int si = 0;
    for (const auto& h : samples) {
        auto perm = random_perm(h.n(), 1234 + si++);
        auto hr = relabelled(h, perm);
        for (int v = 1; v <= h.n(); ++v)
            CHECK(canonical_profile(profile(h, v)) == canonical_profile(profile(hr, perm[v])));
    }
}

TEST_CASE("canonical profile is idempotent") {
    auto h = sample_bounded_degree(14, 4, 2, 5);
    for (int v = 1; v <= h.n(); ++v) {
        auto c = canonical_profile(profile(h, v));
        Profile again;
        again.center = 1;
        again.zvertices.resize(c.z);
        std::iota(again.zvertices.begin(), again.zvertices.end(), 1);
        again.e1 = c.e1;
        again.e2 = c.e2;
        auto c2 = canonical_profile(again);
        CHECK(c2.e1 == c.e1);
        CHECK(c2.e2 == c.e2);
        CHECK(c2 == c);
    }
}

TEST_CASE("parse format round trip") {
    auto h = hamilton_cycle(9, 3, 2);
    auto text = format_hypergraph(h, {"round trip fixture"});
    auto h2 = parse_hypergraph(text);
    CHECK(h2 == h);
    CHECK(format_hypergraph(h2) == format_hypergraph(h));

    auto sampled = sample_bounded_degree(15, 3, 3, 7);
    CHECK(parse_hypergraph(format_hypergraph(sampled)) == sampled);

    for (std::uint64_t i = 0; i < 60; ++i) {
        int r = 2 + static_cast<int>(i % 4);
        int n = r + 1 + static_cast<int>(i % 17);
        double p = 0.05 + 0.09 * static_cast<double>(i % 10);
        auto g = gnp(n, r, p, 500 + i);
        CHECK(parse_hypergraph(format_hypergraph(g)) == g);
        CHECK(format_hypergraph(parse_hypergraph(format_hypergraph(g))) == format_hypergraph(g));
    }
}

TEST_CASE("parser reports errors with line numbers") {
    CHECK_THROWS_AS(parse_hypergraph(""), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("1 4 0\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 5\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 5 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 5 1\n1 2 x\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 5 1\n3 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 5 1\n1 2 6\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 5 2\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 5 1\n1 2 3\n1 2 4\n"), ParseError);

    try {
        parse_hypergraph("# header\n3 5 2\n1 2 3\n1 2 3\n");
        FAIL("expected duplicate edge rejection");
    } catch (const ParseError& e) {
        CHECK(e.line_number == 4);
    }

    // comments and blank lines are fine anywhere
    auto h = parse_hypergraph("# c\n\n2 4 2 # inline\n# mid\n1 2\n3 4\n# tail\n");
    CHECK(h.r() == 2);
    CHECK(h.edge_count() == 2);
}

TEST_CASE("graph basics and conversions") {
    Graph g(4, {{2, 1}, {2, 3}, {4, 3}});
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(2) == 2);
    CHECK(g.neighbors(2) == std::vector<int>{1, 3});
    CHECK(g.has_edge(3, 2));
    CHECK_FALSE(g.has_edge(1, 4));
    CHECK_THROWS_AS(Graph(4, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(4, {{1, 2}, {2, 1}}), std::invalid_argument);

    auto h2 = to_hypergraph(g);
    CHECK(h2.r() == 2);
    CHECK(to_graph(h2) == g);
    CHECK_THROWS_AS(to_graph(complete_hypergraph(4, 3)), std::invalid_argument);
}

TEST_CASE("distance agrees with explicit shadow BFS") {
    auto h = sample_bounded_degree(16, 3, 2, 42);
    auto g = shadow(h);
    for (int u = 1; u <= h.n(); ++u) {
        auto dh = bfs_distances(h, u);
        // reference BFS over the shadow graph adjacency
        std::vector<int> dg(h.n() + 1, -1);
        std::vector<int> queue{u};
        dg[u] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : g.neighbors(v))
                if (dg[w] == -1) {
                    dg[w] = dg[v] + 1;
                    queue.push_back(w);
                }
        }
        CHECK(dh == dg);
    }
}
