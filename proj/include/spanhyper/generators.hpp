#pragma once

#include <cstdint>

#include "spanhyper/hypergraph.hpp"

namespace spanhyper {

// Every randomized generator is a pure function of its arguments; the same
// seed always yields the same hypergraph.

// Each of the C(n,r) possible edges appears independently with probability p.
Hypergraph gnp(int n, int r, double p, std::uint64_t seed);

// Uniformly random set of m distinct edges out of the C(n,r) possible ones.
Hypergraph gnm(int n, int r, std::uint64_t m, std::uint64_t seed);

// Binomial random graph: each pair independently with probability p.
Graph gnp_graph(int n, double p, std::uint64_t seed);

// Complete r-uniform hypergraph: all C(n,r) edges.
Hypergraph complete_hypergraph(int n, int r);

// ell-overlapping Hamilton cycle: cyclic windows of r consecutive vertices
// advancing by r-ell, giving n/(r-ell) edges. Requires (r-ell) | n, n >= r,
// and n > r when ell >= 1 (otherwise windows coincide).
Hypergraph hamilton_cycle(int n, int r, int ell);

// Vertex set [r]^d (coordinate vector (x_1..x_d), 1-based, maps to id
// 1 + sum (x_t - 1) r^(t-1)); edges are the r-sets obtained by varying one
// coordinate. d-regular with d * r^(d-1) edges.
Hypergraph cube_hypergraph(int r, int d);

// (r-1)-overlapping hyperlattice of index k: cells of a (k-2+r) x (k-2+r)
// grid (row-major ids), edges are all horizontal and vertical runs of r
// consecutive cells; 2(k-1)(k-2+r) edges.
Hypergraph lattice(int r, int k);

// Random stacked triangulation of the sphere, r = 3: start from the four
// faces of a tetrahedron and repeatedly subdivide a random face with a fresh
// vertex. 2n-4 edges; every shadow edge lies in exactly two hyperedges.
Hypergraph sphere_apollonian(int n, std::uint64_t seed);

// Checks the sphere invariants: (r-2) e = 2n - 4 and every shadow edge in
// exactly two hyperedges.
bool validate_sphere(const Hypergraph& h);

// i-th power of a tight Hamilton cycle: all r-sets whose minimal enclosing
// cyclic interval has span at most w = r+i-2, i.e. all r-subsets of the
// windows {v..v+w}. Requires n > 2w so each edge has a unique leftmost
// vertex; n * C(w, r-1) edges.
Hypergraph power_hamilton_cycle(int n, int r, int i);

// Disjoint blocks of t consecutive vertices, all r-subsets inside each
// block. Requires t | n and r <= t; (n/t) C(t,r) edges.
Hypergraph kfactor(int n, int r, int t);

// Random member of the bounded-degree family: repeatedly propose a uniform
// r-set and accept it unless it is a duplicate or would push a vertex over
// degree delta; stops once rejection_budget proposals have been rejected
// (default 50 n delta). Max degree <= delta by construction.
Hypergraph sample_bounded_degree(int n, int r, int delta, std::uint64_t seed,
                                 std::uint64_t rejection_budget = 0);

}  // namespace spanhyper
