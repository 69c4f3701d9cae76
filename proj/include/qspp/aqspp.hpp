#pragma once

// Adjacent QSPP: interaction only between arcs that meet head-to-tail.
// On acyclic graphs it reduces to a shortest path in the arc graph.

#include <optional>
#include <vector>

#include "qspp/instance.hpp"

namespace qspp {

/// The arc-lifted graph. Vertex 0 stands for s, vertex e + 1 for original
/// arc e, vertex m + 1 for t. There is an arc V_(i,j) -> V_(j,l) whenever
/// i != l; arcs back into V_(s,s) or out of V_(t,t) are omitted since no
/// s-t walk uses them.
struct AuxiliaryGraph {
  Digraph graph;
  CostVector cost;
  /// Original arc behind each auxiliary vertex; nullopt for the two
  /// terminal vertices.
  std::vector<std::optional<ArcId>> original_arc;

  VertexId source() const { return {0}; }
  VertexId sink() const { return {graph.vertex_count() - 1}; }
};

/// True iff every nonzero off-diagonal q_{(i,j),(k,l)} has j == k, i != l or
/// i == l, j != k.
bool is_adjacent_qspp(const QsppInstance& inst);

/// Throws PreconditionError for non-adjacent interaction.
AuxiliaryGraph build_auxiliary(const QsppInstance& inst);

/// A walk in the original graph (vertices may repeat) with its cost in the
/// auxiliary graph.
struct AuxiliaryWalk {
  std::vector<ArcId> arcs;
  Rational cost;
  bool is_simple_path = false;
};

/// Shortest V_(s,s)-V_(t,t) path in the auxiliary graph, mapped back to the
/// original arcs. Works on any adjacent instance with c, Q >= 0, or on
/// acyclic graphs; on cyclic graphs the result may be a walk.
AuxiliaryWalk auxiliary_shortest_walk(const QsppInstance& inst);

/// Optimal s-t path of an adjacent instance on a DAG. Refuses cyclic graphs
/// with PreconditionError: there the auxiliary shortest path can be a walk
/// that is cheaper than every s-t path.
Solution solve_aqspp(const QsppInstance& inst);

/// The five-vertex cyclic instance (arcs 1->2, 2->3, 3->4, 4->2, 2->5,
/// relabelled 0-based) with c_(3,4) = epsilon, q_{(1,2),(2,5)} = 1, s = 1,
/// t = 5. Requires 0 < epsilon < 1.
QsppInstance make_cyclic_counterexample(const Rational& epsilon);

}  // namespace qspp
