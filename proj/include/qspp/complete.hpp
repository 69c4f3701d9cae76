#pragma once

// Linearizability on simplified complete symmetric digraphs K_n^* and on
// 4-vertex tournaments.

#include <array>
#include <map>
#include <vector>

#include "qspp/linearization.hpp"

namespace qspp {

/// Zeroes q_ef for arc pairs that no s-t path can contain together: pairs
/// sharing a start vertex, pairs sharing an end vertex, and 2-cycles.
/// Throws PreconditionError unless the graph is simplified K_n^*.
QsppInstance normalize_knstar(const QsppInstance& inst);

/// s[i] = 2 * sum of q_ef over the unordered pairs of class T_{i+1}. The
/// classes split pairs by how many arcs lie in H (arcs leaving s or
/// entering t) and by whether the two arcs are adjacent.
struct PathClassSums {
  std::array<Rational, 6> s;
};

struct PathClassCosts {
  PathClassSums sums;
  /// CP_k, the total cost of all s-t paths with k arcs, k = 2 .. n - 1.
  std::map<int, Rational> cp;
};

/// Closed-form CP_k for every path length. Works on the normalized copy of
/// `inst`; linear costs and diagonal entries of Q are included through the
/// per-arc path counts. Throws PreconditionError unless the graph is
/// simplified K_n^* with n >= 4.
PathClassCosts path_class_costs(const QsppInstance& inst);

/// One inequality of the necessary conditions. Kind 'a':
/// CP_k <= CP_{k+1} / (n - k - 1). Kind 'b': CP_k <= (n - k)(k - 2)/(k - 3) CP_{k-1}.
struct ConditionCheck {
  char kind = 'a';
  int k = 0;
  Rational lhs;
  Rational rhs;
  bool holds = true;
};

struct ConditionReport {
  std::vector<ConditionCheck> checks;
  std::map<int, Rational> cp;
  /// A failed inequality proves the instance is not linearizable; when all
  /// hold nothing follows.
  bool any_violated() const;
};

ConditionReport check_necessary_conditions(const QsppInstance& inst);

/// Exact characterization on simplified K_4^*: linearizable with c' >= 0
/// iff all four path costs are nonnegative and C(P1) + C(P2) <= C(P3) + C(P4),
/// where P1, P2 are the two-arc paths and P3, P4 the three-arc paths. On
/// failure the witness is a Farkas certificate over build_path_matrix rows.
LinearizationResult k4_linearize(const QsppInstance& inst);

/// Every instance on a 4-vertex tournament with nonnegative data is
/// linearizable; the vector comes from lp_oracle. Returns c itself when c
/// already reproduces every path cost.
LinearizationResult tournament4_linearize(const QsppInstance& inst);

/// Simplified K_4^* (s = 0, t = 3) with unit interaction on (s,1)-(1,t) and
/// (s,2)-(2,t): path costs (2, 2, 0, 0), not linearizable.
QsppInstance make_k4_example();

/// Simplified K_5^* (s = 0, t = 4) with unit interaction on (2,3)-(3,4):
/// satisfies every necessary condition but is not linearizable.
QsppInstance make_k5_example();

}  // namespace qspp
