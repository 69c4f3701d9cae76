#pragma once

// QSPP / SPP instances over exact rationals, path costs and the reference
// solvers.

#include <string>
#include <utility>
#include <vector>

#include "qspp/graph.hpp"
#include "qspp/rational.hpp"

namespace qspp {

/// (G, s, t, c, Q). The constructor checks only dimensions and endpoints;
/// symmetry, zero diagonal and signs are reported by validate_instance.
struct QsppInstance {
  Digraph graph;
  VertexId s;
  VertexId t;
  CostVector c;
  InteractionMatrix q;

  QsppInstance(Digraph graph, VertexId s, VertexId t, CostVector c,
               InteractionMatrix q);
  /// Zero linear and quadratic costs.
  QsppInstance(Digraph graph, VertexId s, VertexId t);

  int arc_count() const { return graph.arc_count(); }

  friend bool operator==(const QsppInstance& a, const QsppInstance& b);
};

struct SppInstance {
  Digraph graph;
  VertexId s;
  VertexId t;
  CostVector c;

  SppInstance(Digraph graph, VertexId s, VertexId t, CostVector c);
};

struct Solution {
  Path path;
  Rational cost;
};

/// Sets q(e, f) and q(f, e).
void set_interaction(InteractionMatrix& q, ArcId e, ArcId f, const Rational& value);

/// Sum over ordered arc pairs of q_ef plus the linear costs, evaluated
/// directly on the arc list of the path.
template <typename CostDerived, typename InteractionDerived>
Rational path_cost(const Eigen::MatrixBase<CostDerived>& c,
                   const Eigen::MatrixBase<InteractionDerived>& q,
                   const std::vector<ArcId>& arcs) {
  Rational total = 0;
  for (ArcId e : arcs) {
    total += c(e.index);
    for (ArcId f : arcs) total += q(e.index, f.index);
  }
  return total;
}

/// Linear cost of the path: sum of c_e over its arcs.
template <typename CostDerived>
Rational linear_cost(const Eigen::MatrixBase<CostDerived>& c,
                     const std::vector<ArcId>& arcs) {
  Rational total = 0;
  for (ArcId e : arcs) total += c(e.index);
  return total;
}

/// C(P, c, Q). Throws std::invalid_argument if `p` is not an s-t path of
/// the instance graph.
Rational path_cost(const QsppInstance& inst, const Path& p);

/// Same value through x^T Q x + c^T x on the characteristic vector.
Rational quadratic_form_cost(const QsppInstance& inst, const Path& p);

/// Minimum-cost s-t path by enumeration. Ties go to the earliest path in
/// enumeration order. Throws LimitExceeded / NoPathError.
Solution brute_force_solve(const QsppInstance& inst,
                           std::size_t limit = kDefaultPathLimit);

/// Shortest path: Dijkstra when c >= 0, topological relaxation on DAGs
/// otherwise. Relaxation only on strict improvement, so ties keep the
/// lowest-index predecessor. Throws PreconditionError for negative costs on
/// a cyclic graph and NoPathError when t is unreachable.
Solution spp_solve(const SppInstance& inst);

enum class ViolationKind {
  kDimension,
  kEndpoint,
  kAsymmetric,
  kNonzeroDiagonal,
  kNegativeLinearCost,
  kNegativeInteraction,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

/// Structural checks, plus c >= 0 and Q >= 0 when `as_problem` is set.
ValidationReport validate_instance(const QsppInstance& inst, bool as_problem);

/// Same checks on raw parts, for data that never made it into an instance.
ValidationReport validate_parts(const Digraph& g, VertexId s, VertexId t,
                                const CostVector& c, const InteractionMatrix& q,
                                bool as_problem);

bool is_symmetric(const InteractionMatrix& q);

}  // namespace qspp
