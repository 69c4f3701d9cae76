#pragma once

// Linearization on directed grid graphs: reduced forms, critical paths,
// pseudo-linearization and the row-by-row verification sweep.
//
// Most functions come in two flavours. The instance form works on a full
// grid with s in the top-left and t in the bottom-right corner. The SubGrid
// form works on the top-left rows x cols block of a larger grid, with
// vectors still indexed by the arc ids of the full grid; entries outside the
// block are ignored on input and zero on output.

#include <map>
#include <utility>
#include <vector>

#include "qspp/linearization.hpp"

namespace qspp {

struct SubGrid {
  int rows = 2;
  int cols = 2;
};

/// Order in which vertices of equal depth are processed by
/// reduce_cost_vector. The result does not depend on it.
enum class TieOrder { kIncreasingColumn, kDecreasingColumn };

/// The arc set J outside which reduced forms vanish: every downward arc not
/// in the last column, plus the first rightward arc out of the corner. A
/// single-column block has J = {first downward arc}.
std::vector<ArcId> reduced_support(const GridShape& g, SubGrid sub);

/// Moves cost off one outgoing arc of every inner vertex (the rightward arc,
/// or the downward arc in the last column) onto the incoming arcs,
/// subtracting it from the other outgoing arc. Vertices are processed from
/// the deepest (row + column) inward. Path costs are unchanged and the
/// result is zero outside J.
CostVector reduce_cost_vector(const GridShape& g, const CostVector& c, SubGrid sub,
                              TieOrder order = TieOrder::kIncreasingColumn);
CostVector reduce_cost_vector(const QsppInstance& inst,
                              TieOrder order = TieOrder::kIncreasingColumn);

/// Critical path of e in J: down the first column to e's row, right to e,
/// through e, right to the last column, then down. For the corner rightward
/// arc the path runs along the first row and down the last column.
std::vector<ArcId> critical_path(const GridShape& g, SubGrid sub, ArcId e);

/// All (p - 1)(q - 1) + 1 critical paths of G_{p,q}, keyed by their arc in J.
std::map<ArcId, Path> critical_paths(int p, int q);

/// C(P_e, c, Q) for every e in J. Starts from the first-row path and walks
/// the remaining critical paths in an order where consecutive paths differ
/// in two arcs, updating the cost from the difference only.
std::vector<std::pair<ArcId, Rational>> critical_path_costs(const GridShape& g,
                                                            const CostVector& c,
                                                            const InteractionMatrix& q,
                                                            SubGrid sub);

/// The unique vector in reduced form that gives every critical path its
/// quadratic cost. It linearizes the instance iff the instance is
/// linearizable.
CostVector pseudo_linearize(const GridShape& g, const CostVector& c, const InteractionMatrix& q,
                            SubGrid sub);
CostVector pseudo_linearize(const QsppInstance& inst);

/// Moves the target from t to v for an arc (v, t):
/// c^v_e = c'_e - 2 q_{(v,t),e}, plus c'_{(v,t)} when e leaves s.
/// If c' linearizes (G, s, t) with zero linear costs and symmetric Q, c^v
/// linearizes (G, s, v). Throws PreconditionError when (v, t) is missing or
/// the graph is cyclic.
CostVector shrink_target(const CostVector& linearization, const QsppInstance& inst, VertexId v);

/// Explicit linearization of any instance on G_{2,q}: the first downward arc
/// gets C(P_1), the downward arc of column k gets C(P_k) - C(P_q) for
/// 1 < k < q, the corner rightward arc gets C(P_q), where P_k is the path
/// that goes down in column k. Throws PreconditionError unless p == 2.
CostVector linearize_g2q(const QsppInstance& inst);
CostVector linearize_g2q(const GridShape& g, const CostVector& c, const InteractionMatrix& q,
                         SubGrid sub);

/// Decides sign-unrestricted linearizability on G_{p,q}. Linear costs and
/// the diagonal of Q are accepted and handled internally. On success the
/// vector is the pseudo-linearization (in reduced form, entries of any
/// sign); on failure the witness is a path whose cost it gets wrong.
LinearizationResult linearize_grid(const QsppInstance& inst);

}  // namespace qspp
