#pragma once

// Seeded random instance data. Every function draws from the generator it
// is given, so a fixed seed reproduces the same instance.

#include <random>
#include <utility>

#include "qspp/instance.hpp"
#include "qspp/reductions.hpp"

namespace qspp {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
Rational random_integer(Rng& rng, int lo, int hi);

CostVector random_costs(Rng& rng, int m, int lo, int hi);

/// Symmetric, zero diagonal; each pair is nonzero with probability `density`.
InteractionMatrix random_interaction(Rng& rng, int m, int lo, int hi, double density = 1.0);

/// q_ef = a_e + a_f with a_e uniform in [lo, hi].
std::pair<InteractionMatrix, Vector> random_weak_sum(Rng& rng, int m, int lo, int hi);

/// a uniform in [lo, hi] (lo >= 0): Q = a a^T off the diagonal, c_e = a_e^2.
std::pair<InteractionMatrix, CostVector> random_product(Rng& rng, int m, int lo, int hi);

/// Random interaction restricted to head-to-tail adjacent arc pairs.
InteractionMatrix random_adjacent_interaction(Rng& rng, const Digraph& g, int lo, int hi);

/// DAG on vertices 0 .. n-1 with arc i -> j (i < j) present with
/// probability `density`; redrawn until n - 1 is reachable from 0.
Digraph random_dag(Rng& rng, int n, double density);

/// z_e = pi(head) - pi(tail) for random potentials with pi(s) = pi(t) = 0.
/// Adding z to a cost vector leaves every s-t path cost unchanged.
CostVector random_potential_kernel(Rng& rng, const Digraph& g, VertexId s, VertexId t, int lo,
                                   int hi);

/// Symmetric flow and distance matrices with zero diagonal and a linear
/// cost matrix, entries in [lo, hi].
QapInstance random_qap(Rng& rng, int n, int lo, int hi);

}  // namespace qspp
