#include <map>
#include <set>

#include "doctest.h"
#include "spanhyper/generators.hpp"
#include "spanhyper/hypergraph.hpp"
#include "spanhyper/rational.hpp"

using namespace spanhyper;

TEST_CASE("gnp extremes and determinism") {
    CHECK(gnp(6, 3, 1.0, 1) == complete_hypergraph(6, 3));
    CHECK(gnp(6, 3, 0.0, 1).edge_count() == 0);
    CHECK(gnp(12, 3, 0.4, 9) == gnp(12, 3, 0.4, 9));
    CHECK_FALSE(gnp(12, 3, 0.4, 9) == gnp(12, 3, 0.4, 10));
    CHECK_THROWS_AS(gnp(6, 3, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(gnp(2, 3, 0.5, 1), std::invalid_argument);

    // edge frequency sanity at p = 1/2
    auto h = gnp(30, 3, 0.5, 123);
    double frac = static_cast<double>(h.edge_count()) / static_cast<double>(binomial_u64(30, 3));
    CHECK(frac > 0.45);
    CHECK(frac < 0.55);
}

TEST_CASE("gnm counts and uniformity") {
    CHECK(gnm(6, 3, 20, 5) == complete_hypergraph(6, 3));
    CHECK(gnm(6, 3, 0, 5).edge_count() == 0);
    for (std::uint64_t m : {1ULL, 7ULL, 13ULL}) CHECK(gnm(7, 3, m, 3).edge_count() == static_cast<int>(m));
    CHECK(gnm(7, 3, 13, 3) == gnm(7, 3, 13, 3));
    CHECK_THROWS_AS(gnm(4, 3, 5, 1), std::invalid_argument);

    // single-edge draws hit every possible edge about equally often
    std::map<std::vector<std::vector<int>>, int> counts;
    const int draws = 6000;
    for (int s = 0; s < draws; ++s) counts[gnm(4, 2, 1, 1000 + s).edge_lists()]++;
    REQUIRE(counts.size() == 6);
    for (const auto& [e, c] : counts) {
        CHECK(c > draws / 6 - 150);
        CHECK(c < draws / 6 + 150);
    }
}

TEST_CASE("hamilton cycles") {
    auto tight = hamilton_cycle(6, 3, 2);
    CHECK(tight.edge_count() == 6);
    for (int v = 1; v <= 6; ++v) CHECK(tight.degree(v) == 3);
    CHECK(tight.has_edge(std::vector<int>{1, 2, 3}));
    CHECK(tight.has_edge(std::vector<int>{1, 2, 6}));
    CHECK(tight.has_edge(std::vector<int>{1, 5, 6}));

    auto loose = hamilton_cycle(6, 3, 1);
    CHECK(loose.edge_count() == 3);
    CHECK(loose.edge_lists() == std::vector<std::vector<int>>{{1, 2, 3}, {1, 5, 6}, {3, 4, 5}});

    auto matching = hamilton_cycle(6, 3, 0);
    CHECK(matching.edge_lists() == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}});

    // consecutive windows share exactly ell vertices
    for (int r = 3; r <= 5; ++r)
        for (int ell = 0; ell < r; ++ell) {
            int step = r - ell, m = 4;
            int n = m * step;
            if (n < r + step) continue;
            auto h = hamilton_cycle(n, r, ell);
            REQUIRE(h.edge_count() == m);
            auto edges = h.edge_lists();
            // reconstruct window order by start position
            for (int k = 0; k < m; ++k) {
                std::set<int> a, b;
                for (int j = 0; j < r; ++j) {
                    a.insert((k * step + j) % n + 1);
                    b.insert(((k + 1) % m * step + j) % n + 1);
                }
                std::vector<int> inter;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
                CHECK(static_cast<int>(inter.size()) == ell);
            }
        }

    CHECK_THROWS_AS(hamilton_cycle(7, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(hamilton_cycle(4, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(hamilton_cycle(6, 3, 3), std::invalid_argument);
    CHECK(hamilton_cycle(3, 3, 0).edge_count() == 1);
}

TEST_CASE("cube") {
    auto q32 = cube_hypergraph(3, 2);
    CHECK(q32.n() == 9);
    CHECK(q32.edge_count() == 6);
    for (int v = 1; v <= 9; ++v) CHECK(q32.degree(v) == 2);

    auto q23 = cube_hypergraph(2, 3);
    CHECK(q23.n() == 8);
    CHECK(q23.edge_count() == 12);
    for (int v = 1; v <= 8; ++v) CHECK(q23.degree(v) == 3);

    auto q33 = cube_hypergraph(3, 3);
    CHECK(q33.n() == 27);
    CHECK(q33.edge_count() == 27);
    CHECK(q33.max_degree() == 3);
    // lines through the centre cell of each axis
    CHECK(q33.has_edge(std::vector<int>{13, 14, 15}));
    CHECK(q33.has_edge(std::vector<int>{11, 14, 17}));
    CHECK(q33.has_edge(std::vector<int>{5, 14, 23}));
}

TEST_CASE("lattice") {
    for (int r = 3; r <= 4; ++r)
        for (int k = 2; k <= 4; ++k) {
            auto h = lattice(r, k);
            int side = k - 2 + r;
            CHECK(h.n() == side * side);
            CHECK(h.edge_count() == 2 * (k - 1) * side);
        }
    CHECK(lattice(3, 2) == cube_hypergraph(3, 2));

    // r = 2 gives the usual square grid
    auto grid = lattice(2, 3);
    CHECK(grid.n() == 9);
    CHECK(grid.edge_count() == 12);
    auto g = to_graph(grid);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(1, 4));
    CHECK_FALSE(g.has_edge(1, 5));
    CHECK(g.degree(5) == 4);
}

TEST_CASE("sphere") {
    CHECK(sphere_apollonian(4, 62) == complete_hypergraph(4, 3));
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 77ULL}) {
        for (int n : {5, 8, 12, 30}) {
            auto s = sphere_apollonian(n, seed);
            CHECK(s.edge_count() == 2 * n - 4);
            CHECK(validate_sphere(s));
            CHECK(components(s).size() == 1);
        }
    }
    CHECK(sphere_apollonian(9, 5) == sphere_apollonian(9, 5));
    CHECK_FALSE(validate_sphere(hamilton_cycle(8, 3, 2)));
    CHECK_THROWS_AS(sphere_apollonian(3, 1), std::invalid_argument);
}

TEST_CASE("power of tight cycle") {
    CHECK(power_hamilton_cycle(8, 3, 1) == hamilton_cycle(8, 3, 2));
    auto p2 = power_hamilton_cycle(8, 3, 2);
    CHECK(p2.edge_count() == 24);
    CHECK(p2.has_edge(std::vector<int>{1, 2, 4}));
    CHECK(p2.has_edge(std::vector<int>{1, 3, 4}));
    CHECK_FALSE(p2.has_edge(std::vector<int>{1, 4, 7}));
    CHECK_FALSE(p2.has_edge(std::vector<int>{1, 2, 5}));

    for (int r = 3; r <= 4; ++r)
        for (int i = 1; i <= 2; ++i) {
            int w = r + i - 2;
            int n = 2 * w + 3;
            auto h = power_hamilton_cycle(n, r, i);
            CHECK(static_cast<std::uint64_t>(h.edge_count()) == n * binomial_u64(w, r - 1));
        }
    CHECK_THROWS_AS(power_hamilton_cycle(6, 3, 2), std::invalid_argument);
}

TEST_CASE("kfactor") {
    auto m3 = kfactor(9, 3, 3);
    CHECK(m3.edge_lists() == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK(kfactor(6, 3, 3) == hamilton_cycle(6, 3, 0));
    auto k44 = kfactor(8, 4, 4);
    CHECK(k44.edge_count() == 2);
    auto k34 = kfactor(8, 3, 4);
    CHECK(k34.edge_count() == 8);
    CHECK(static_cast<std::uint64_t>(k34.edge_count()) == 2 * binomial_u64(4, 3));
    CHECK_THROWS_AS(kfactor(9, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(kfactor(9, 4, 3), std::invalid_argument);
}

TEST_CASE("bounded degree sampler") {
    for (std::uint64_t seed : {1ULL, 9ULL, 33ULL}) {
        auto h = sample_bounded_degree(12, 3, 2, seed);
        CHECK(h.max_degree() <= 2);
        CHECK(h.edge_count() > 0);
    }
    CHECK(sample_bounded_degree(20, 3, 2, 4) == sample_bounded_degree(20, 3, 2, 4));
    CHECK_FALSE(sample_bounded_degree(20, 3, 2, 4) == sample_bounded_degree(20, 3, 2, 5));

    // delta = 1 forces a partial matching
    auto pm = sample_bounded_degree(15, 3, 1, 8);
    CHECK(pm.max_degree() <= 1);
    std::set<int> used;
    for (const auto& e : pm.edge_lists())
        for (int v : e) CHECK(used.insert(v).second);

    auto r4 = sample_bounded_degree(16, 4, 3, 2);
    CHECK(r4.r() == 4);
    CHECK(r4.max_degree() <= 3);
}
