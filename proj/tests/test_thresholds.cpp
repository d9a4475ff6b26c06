#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "spanhyper/generators.hpp"
#include "spanhyper/subsets.hpp"
#include "spanhyper/thresholds.hpp"

using namespace spanhyper;

namespace {

// Independent oracle: plain enumeration of all v-subsets.
int e_sub_oracle(const Hypergraph& h, int v) {
    if (v < h.r()) return 0;
    int best = 0;
    auto s = first_subset(v);
    do {
        std::vector<char> in(h.n() + 1, 0);
        for (int x : s) in[x] = 1;
        int cnt = 0;
        for (int e = 0; e < h.edge_count(); ++e) {
            auto edge = h.edge(e);
            if (std::all_of(edge.begin(), edge.end(), [&](int w) { return in[w]; })) ++cnt;
        }
        best = std::max(best, cnt);
    } while (next_subset(s, h.n()));
    return best;
}

// Independent oracle: scan all n! permutations.
long long aut_oracle(const Hypergraph& h) {
    std::vector<int> perm(h.n());
    std::iota(perm.begin(), perm.end(), 1);
    long long count = 0;
    do {
        bool ok = true;
        std::vector<int> img;
        for (int e = 0; e < h.edge_count() && ok; ++e) {
            auto edge = h.edge(e);
            img.assign(edge.begin(), edge.end());
            for (auto& x : img) x = perm[x - 1];
            std::sort(img.begin(), img.end());
            ok = h.has_edge(img);
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

TEST_CASE("e_sub frozen tables") {
    auto k4 = complete_hypergraph(4, 3);
    CHECK(e_sub(k4, 2) == 0);
    CHECK(e_sub(k4, 3) == 1);
    CHECK(e_sub(k4, 4) == 4);

    auto tight = hamilton_cycle(6, 3, 2);
    CHECK(e_sub(tight, 3) == 1);
    CHECK(e_sub(tight, 4) == 2);
    CHECK(e_sub(tight, 5) == 3);
    CHECK(e_sub(tight, 6) == 6);

    auto loose = hamilton_cycle(6, 3, 1);
    CHECK(e_sub(loose, 4) == 1);
    CHECK(e_sub(loose, 5) == 2);
    CHECK(e_sub(loose, 6) == 3);

    auto grid = cube_hypergraph(3, 2);
    std::vector<int> expected{1, 2, 2, 3, 4, 6};  // v = 4..9
    for (int v = 4; v <= 9; ++v) CHECK(e_sub(grid, v) == expected[v - 4]);

    CHECK_THROWS_AS(e_sub(k4, 5), std::invalid_argument);
}

TEST_CASE("e_sub matches exhaustive oracle") {
    auto samples = {hamilton_cycle(8, 3, 2), hamilton_cycle(10, 3, 1), cube_hypergraph(3, 2),
                    power_hamilton_cycle(8, 3, 2), sample_bounded_degree(10, 3, 3, 17),
                    sample_bounded_degree(11, 4, 2, 3), gnp(9, 3, 0.35, 5)};
    for (const auto& h : samples)
        for (int v = h.r(); v <= h.n(); ++v) CHECK(e_sub(h, v) == e_sub_oracle(h, v));
}

TEST_CASE("gamma frozen values") {
    auto rep = gamma(complete_hypergraph(4, 3));
    CHECK(rep.gamma == Rational(2));
    CHECK(rep.argmax_v == 4);
    CHECK(rep.alpha == Rational(1));

    CHECK(gamma(hamilton_cycle(6, 3, 2)).gamma == Rational(3, 2));
    CHECK(gamma(hamilton_cycle(8, 3, 2)).gamma == Rational(4, 3));
    CHECK(gamma(hamilton_cycle(10, 3, 2)).gamma == Rational(5, 4));

    auto grid = gamma(cube_hypergraph(3, 2));
    CHECK(grid.gamma == Rational(6, 7));
    CHECK(grid.argmax_v == 9);

    CHECK(gamma(hamilton_cycle(6, 3, 1)).gamma == Rational(3, 4));

    // the whole cycle does not maximize the ratio for small overlap: here the
    // max sits on five vertices spanning two edges, not on all ten
    auto l10 = gamma(hamilton_cycle(10, 3, 1));
    CHECK(l10.gamma == Rational(2, 3));
    CHECK(l10.argmax_v == 5);

    CHECK(gamma(hamilton_cycle(9, 3, 0)).gamma == Rational(1, 2));

    auto p2 = gamma(power_hamilton_cycle(8, 3, 2));
    CHECK(p2.gamma == Rational(4));
    CHECK(p2.argmax_v == 8);
    CHECK(p2.e_sub_table[8] == 24);

    CHECK_THROWS_AS(gamma(Hypergraph(3, 3, std::vector<std::vector<int>>{{1, 2, 3}})), std::invalid_argument);
}

TEST_CASE("closed forms") {
    CHECK(gamma_closed_form_hamilton(6, 3, 2) == Rational(3, 2));
    CHECK(gamma_closed_form_hamilton(12, 4, 2) == Rational(3, 5));
    CHECK(gamma_closed_form_hamilton(10, 5, 3) == Rational(5, 8));
    CHECK(gamma_closed_form_hamilton(7, 3, 2) == Rational(7, 5));
    CHECK_THROWS_AS(gamma_closed_form_hamilton(10, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(gamma_closed_form_hamilton(9, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(gamma_closed_form_hamilton(7, 3, 1), std::invalid_argument);

    CHECK(gamma_closed_form_lattice(3, 2) == Rational(2));
    CHECK(gamma_closed_form_sphere(3) == Rational(2));
    CHECK(gamma_closed_form_sphere(4) == Rational(1));
    CHECK(gamma_closed_form_sphere(5) == Rational(2, 3));
    CHECK(gamma_closed_form_power(3, 1) == Rational(1));
    CHECK(gamma_closed_form_power(3, 2) == Rational(3));
    CHECK(gamma_closed_form_power(4, 2) == Rational(4));
}

TEST_CASE("closed forms vs exact computation") {
    // exact equality where the form is exact: cycles with ell >= 2, spheres
    for (int n : {6, 7, 8, 9, 10, 12}) CHECK(gamma(hamilton_cycle(n, 3, 2)).gamma == gamma_closed_form_hamilton(n, 3, 2));
    for (int n : {8, 12}) CHECK(gamma(hamilton_cycle(n, 4, 2)).gamma == gamma_closed_form_hamilton(n, 4, 2));
    CHECK(gamma(hamilton_cycle(8, 4, 3)).gamma == gamma_closed_form_hamilton(8, 4, 3));
    CHECK(gamma(hamilton_cycle(10, 5, 4)).gamma == gamma_closed_form_hamilton(10, 5, 4));
    CHECK(gamma(hamilton_cycle(12, 5, 3)).gamma == gamma_closed_form_hamilton(12, 5, 3));

    for (int n : {5, 6, 7, 8})
        for (std::uint64_t s : {1ULL, 4ULL}) CHECK(gamma(sphere_apollonian(n, s)).gamma == gamma_closed_form_sphere(3));
    // the tetrahedron is the smallest sphere
    CHECK(gamma(complete_hypergraph(4, 3)).gamma == gamma_closed_form_sphere(3));

    // bound families: exact value respects the stated bound or leading term
    CHECK(gamma(cube_hypergraph(3, 2)).gamma < gamma_closed_form_lattice(3, 2));
    CHECK(gamma(power_hamilton_cycle(8, 3, 2)).gamma >= gamma_closed_form_power(3, 2));
    CHECK(gamma(power_hamilton_cycle(12, 3, 2)).gamma >= gamma_closed_form_power(3, 2));
}

TEST_CASE("threshold formulas") {
    CHECK(expectation_threshold(Rational(3, 2), 64) == doctest::Approx(0.0625).epsilon(1e-12));
    CHECK(expectation_threshold(Rational(2), 100) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(expectation_threshold(Rational(1, 2), 10) == doctest::Approx(0.01).epsilon(1e-12));
    CHECK_THROWS_AS(expectation_threshold(Rational(0), 10), std::invalid_argument);

    CHECK(sharp_threshold_regular(256, 3, 2) == doctest::Approx(1.0 / 4096).epsilon(1e-12));
    CHECK(sharp_threshold_regular(27, 3, 3) == doctest::Approx(1.0 / 27).epsilon(1e-12));
    CHECK(sharp_threshold_regular(16, 2, 4) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("containment conditions report") {
    auto c100 = hamilton_cycle(100, 3, 2);
    auto rep = check_riordan_conditions(c100, 0.5, Rational(50, 49));
    CHECK(rep.holds_first);
    CHECK(rep.lhs_first == Rational(100));
    CHECK(rep.rhs_first == Rational(100, 3));
    CHECK(rep.slack_first == Rational(200, 3));
    CHECK(rep.alpha == Rational(BigInt(100), big_binomial(100, 3)));
    CHECK(rep.max_deg == 3);
    CHECK(rep.growth_first == doctest::Approx(0.5 * 161700.0));
    double expected = 100.0 * std::pow(0.5, 50.0 / 49.0) / 81.0;
    CHECK(rep.value_second == doctest::Approx(expected).epsilon(1e-12));

    // small instance without override: gamma computed exactly
    auto c8 = hamilton_cycle(8, 3, 2);
    auto rep8 = check_riordan_conditions(c8, 0.25);
    CHECK(rep8.gamma_value == Rational(4, 3));
    CHECK(rep8.holds_first);  // 8 > 8/3
    CHECK(rep8.value_second == doctest::Approx(8.0 * std::pow(0.25, 4.0 / 3.0) / 81.0));

    // sparse failing instance: a single edge on many vertices
    Hypergraph sparse(3, 12, std::vector<std::vector<int>>{{1, 2, 3}});
    auto reps = check_riordan_conditions(sparse, 0.1);
    CHECK_FALSE(reps.holds_first);  // 1 < 4
    CHECK(reps.slack_first == Rational(-3));

    Hypergraph empty(3, 6, std::vector<std::vector<int>>{});
    auto repe = check_riordan_conditions(empty, 0.5);
    CHECK(std::isinf(repe.value_second));
    CHECK_THROWS_AS(check_riordan_conditions(c8, 1.5), std::invalid_argument);
}

TEST_CASE("fractional density") {
    CHECK(fractional_density_m1(complete_hypergraph(4, 3)) == Rational(4, 3));
    CHECK(fractional_density_m1(Hypergraph(3, 3, std::vector<std::vector<int>>{{1, 2, 3}})) == Rational(1, 2));
    CHECK(fractional_density_m1(Hypergraph(3, 6, std::vector<std::vector<int>>{})) == Rational(0));
    CHECK(fractional_density_m1(Hypergraph(3, 5, std::vector<std::vector<int>>{{1, 2, 3}, {3, 4, 5}})) == Rational(1, 2));
    CHECK(fractional_density_m1(complete_hypergraph(5, 3)) == Rational(5, 2));
    CHECK(fractional_density_m1(Hypergraph(4, 2, std::vector<std::vector<int>>{})) == Rational(0));
}

TEST_CASE("automorphism counts match permutation oracle") {
    auto matching = hamilton_cycle(6, 3, 0);
    CHECK(count_automorphisms(matching) == BigInt(72));
    CHECK(aut_oracle(matching) == 72);

    auto tight = hamilton_cycle(6, 3, 2);
    CHECK(count_automorphisms(tight) == BigInt(12));
    CHECK(aut_oracle(tight) == 12);

    auto loose = hamilton_cycle(6, 3, 1);
    CHECK(count_automorphisms(loose) == BigInt(aut_oracle(loose)));

    auto k4 = complete_hypergraph(4, 3);
    CHECK(count_automorphisms(k4) == BigInt(24));

    Hypergraph path(3, 5, std::vector<std::vector<int>>{{1, 2, 3}, {3, 4, 5}});
    CHECK(count_automorphisms(path) == BigInt(aut_oracle(path)));
    CHECK(count_automorphisms(path) == BigInt(8));

    Hypergraph lone(3, 4, std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(count_automorphisms(lone) == BigInt(6));
    CHECK(aut_oracle(lone) == 6);

    Hypergraph empty(3, 4, std::vector<std::vector<int>>{});
    CHECK(count_automorphisms(empty) == BigInt(24));

    auto q = cube_hypergraph(3, 2);
    CHECK(count_automorphisms(q) == BigInt(aut_oracle(q)));
}

TEST_CASE("copy counts in the complete host") {
    CHECK(count_copies(hamilton_cycle(6, 3, 0), 6) == BigInt(10));
    CHECK(count_copies(hamilton_cycle(6, 3, 2), 6) == BigInt(60));
    Hypergraph edge(3, 3, std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(count_copies(edge, 7) == BigInt(35));
    CHECK(count_copies(edge, 3) == BigInt(1));

    // enumeration agrees whenever the pattern has no isolated vertices
    CHECK(BigInt(enumerate_copies(hamilton_cycle(6, 3, 0), 6).size()) == count_copies(hamilton_cycle(6, 3, 0), 6));
    CHECK(BigInt(enumerate_copies(hamilton_cycle(6, 3, 2), 6).size()) == count_copies(hamilton_cycle(6, 3, 2), 6));
    CHECK(BigInt(enumerate_copies(hamilton_cycle(6, 3, 2), 7).size()) == count_copies(hamilton_cycle(6, 3, 2), 7));
    CHECK(enumerate_copies(edge, 7).size() == 35);
    CHECK(BigInt(enumerate_copies(hamilton_cycle(6, 3, 1), 6).size()) == count_copies(hamilton_cycle(6, 3, 1), 6));

    // with isolated vertices the formula counts placements, the enumeration
    // counts distinct edge sets
    Hypergraph padded(3, 4, std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(count_copies(padded, 6) == BigInt(60));
    CHECK(enumerate_copies(padded, 6).size() == 20);
}

TEST_CASE("second moment exact values") {
    auto matching = hamilton_cycle(6, 3, 0);
    auto rep = second_moment_ratio(matching, 6, 10);
    CHECK(rep.possible_edges == 20);
    CHECK(rep.pattern_edges == 2);
    CHECK(rep.copy_count == BigInt(10));
    CHECK(rep.ex == Rational(BigInt(10) * big_binomial(18, 8), big_binomial(20, 10)));
    CHECK(rep.ex_positive);
    CHECK(rep.ratio >= Rational(1));

    // taking every edge makes X constant
    auto full = second_moment_ratio(matching, 6, 20);
    CHECK(full.ex == Rational(10));
    CHECK(full.ratio == Rational(1));

    // fewer edges than the pattern: expectation zero
    auto zero = second_moment_ratio(matching, 6, 1);
    CHECK_FALSE(zero.ex_positive);
    CHECK(zero.ex == Rational(0));

    CHECK_THROWS_AS(second_moment_ratio(matching, 6, 21), std::invalid_argument);
}

TEST_CASE("chebyshev bound verified by full enumeration") {
    auto matching = hamilton_cycle(6, 3, 0);
    for (int m : {2, 3, 4, 10}) {
        auto rep = chebyshev_check(matching, 6, m);
        CHECK(rep.applicable);
        CHECK(rep.holds);
        CHECK(rep.ex_enum == rep.moments.ex);
        CHECK(rep.ex2_enum == rep.moments.ex2);
    }

    Hypergraph edge(3, 3, std::vector<std::vector<int>>{{1, 2, 3}});
    auto rep = chebyshev_check(edge, 5, 3);
    CHECK(rep.applicable);
    CHECK(rep.holds);
    CHECK(rep.ex_enum == rep.moments.ex);
    CHECK(rep.ex2_enum == rep.moments.ex2);

    // tight cycle on six vertices, host K6 minus nothing: m = N gives X = 60
    auto tight = hamilton_cycle(6, 3, 2);
    auto trep = chebyshev_check(tight, 6, 20);
    CHECK(trep.p_zero == Rational(0));
    CHECK(trep.ex_enum == Rational(60));
}
