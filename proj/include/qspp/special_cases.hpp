#pragma once

// Polynomially solvable structure: weak-sum and rank-one interaction
// matrices, equal-length path systems and directed cycles.

#include <optional>

#include "qspp/instance.hpp"

namespace qspp {

/// q_ef = a_e + a_f for every e != f. The diagonal is unconstrained.
struct WeakSumWitness {
  Vector a;
};

/// Q + Diag(c) = a a^T with a >= 0.
struct ProductWitness {
  Vector a;
};

/// Recovers the generator of a symmetric weak-sum matrix. For m >= 3 the
/// generator is unique; for m == 2 the symmetric split a = (q01/2, q01/2) is
/// returned, for m <= 1 the zero vector.
std::optional<WeakSumWitness> detect_weak_sum(const InteractionMatrix& q);

/// Off-diagonal entries a_e + a_f; zero diagonal.
InteractionMatrix weak_sum_matrix(const Vector& a);

/// Common length of all s-t paths, if there is one. Vertices that lie on
/// no s-t path are ignored. Linear time on DAGs; on cyclic graphs the paths
/// are enumerated, throwing LimitExceeded past kDefaultPathLimit. Throws
/// NoPathError when t is unreachable.
std::optional<int> all_paths_equal_length(const Digraph& g, VertexId s, VertexId t);

/// c'_e = 2 (L - 1) a_e + c_e + q_ee. Throws PreconditionError unless Q is weak-sum
/// and all s-t paths share the length L.
CostVector linearize_weak_sum(const QsppInstance& inst);

enum class ProductStatus {
  kProduct,
  kNotProduct,
  /// Q + Diag(c) is a nonnegative rank-one matrix, but some diagonal entry
  /// is not the square of a rational.
  kIrrational,
};

struct ProductCheck {
  ProductStatus status = ProductStatus::kNotProduct;
  std::optional<ProductWitness> witness;
};

ProductCheck check_product(const InteractionMatrix& q, const CostVector& c);

/// Witness only for exactly representable rank-one factorizations.
std::optional<ProductWitness> detect_product(const InteractionMatrix& q,
                                             const CostVector& c);

/// Shortest path under weights a, cost (sum a_e)^2. Throws
/// PreconditionError when no rational product witness exists.
Solution solve_product_case(const QsppInstance& inst);

/// On a directed cycle the only s-t path carries its full cost on its first
/// arc. Throws PreconditionError when the graph is not a directed cycle.
CostVector linearize_directed_cycle(const QsppInstance& inst);

}  // namespace qspp
