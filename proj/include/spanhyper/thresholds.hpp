#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spanhyper/hypergraph.hpp"
#include "spanhyper/rational.hpp"

namespace spanhyper {

// Exact maximum number of edges induced on any v-subset of V(h); 0 for
// v < r. Branch and bound over vertices in descending-degree order, pruning
// with alive-edge counts and degree sums; the pruning never affects the
// value, only the node count.
int e_sub(const Hypergraph& h, int v);

struct DensityReport {
    Rational gamma;                // max over r+1 <= v <= n of e_sub(v)/(v-2)
    int argmax_v = 0;              // smallest v attaining the max
    std::vector<int> e_sub_table;  // index v in 0..n; zero below v = r
    Rational alpha;                // e(h) / C(n,r)
};

// Exact density parameter. Requires n >= r+1.
DensityReport gamma(const Hypergraph& h);

// Closed-form values per family. The Hamilton form n/((r-ell)(n-2)) is exact
// for ell >= 2 (the ratio is maximized by the whole cycle); for ell <= 1 the
// whole cycle need not maximize and the form is wrong, so it is rejected.
Rational gamma_closed_form_hamilton(int n, int r, int ell);
// Upper bound 2, from e(v) <= 2(v - r); approached only as n grows.
Rational gamma_closed_form_lattice(int r, int k);
/// Exact: 2/(r-2), attained by the full sphere.
Rational gamma_closed_form_sphere(int r);
// Leading term C(r+i-2, r-1); the exact value at finite n exceeds it by a
// factor of order 1 + O(1/n).
Rational gamma_closed_form_power(int r, int i);

// Threshold scale n^(-1/gamma).
double expectation_threshold(const Rational& gamma_value, int n);

// Sharp threshold n^(-r/delta) for delta-regular patterns.
double sharp_threshold_regular(int n, int r, int delta);

struct ConditionsReport {
    Rational alpha;       // e(h) / C(n,r)
    Rational lhs_first;   // alpha * C(n,r)
    Rational rhs_first;   // n / r
    Rational slack_first; // lhs - rhs
    bool holds_first = false;
    double growth_first = 0.0;  // p * C(n,r), the part that must diverge
    Rational gamma_value;
    int max_deg = 0;
    double value_second = 0.0;  // n * p^gamma * delta^(-4), must diverge
};

// Evaluates both containment-theorem conditions at a concrete (h, p). The
// divergence clauses are reported as plain values. gamma_override skips the
// exact computation (useful when n is too large for e_sub).
ConditionsReport check_riordan_conditions(const Hypergraph& h, double p,
                                          const std::optional<Rational>& gamma_override = std::nullopt);

// max over r <= v <= n of e_sub(v)/(v-1); zero when n < r or no edges.
Rational fractional_density_m1(const Hypergraph& h);

// Order of the automorphism group of pattern (on its declared vertex set,
// isolated vertices included).
BigInt count_automorphisms(const Hypergraph& pattern);

// Number of copies of pattern in the complete r-uniform hypergraph on n
// vertices: n! / (aut * (n-v)!).
BigInt count_copies(const Hypergraph& pattern, int n);

// All distinct copies of pattern in K_n, each as a bitmask over the
// lexicographic rank of the C(n,r) possible edges. Requires C(n,r) <= 64.
std::vector<std::uint64_t> enumerate_copies(const Hypergraph& pattern, int n);

struct SecondMomentReport {
    int n = 0, r = 0, m = 0;
    std::uint64_t possible_edges = 0;  // N = C(n,r)
    int pattern_edges = 0;
    BigInt copy_count;
    Rational ex;        // E X   in the uniform m-edge model
    Rational ex2;       // E X^2
    bool ex_positive = false;
    Rational ratio;     // E X^2 / (E X)^2 when ex_positive, else 0
};

// Exact second-moment ratio for the number of pattern copies in a uniformly
// random m-edge host on n vertices.
SecondMomentReport second_moment_ratio(const Hypergraph& pattern, int n, int m);

struct ChebyshevReport {
    SecondMomentReport moments;
    BigInt hosts;          // C(N, m)
    Rational p_zero;       // exact P(X = 0) over all hosts
    Rational bound;        // ratio - 1
    bool applicable = false;  // ex > 0
    bool holds = false;       // p_zero <= bound (when applicable)
    Rational ex_enum, ex2_enum;  // moments recomputed by full enumeration
};

// Verifies P(X = 0) <= ratio - 1 by enumerating every m-edge host. Also
// recomputes both moments by enumeration as a cross-check.
ChebyshevReport chebyshev_check(const Hypergraph& pattern, int n, int m);

}  // namespace spanhyper
