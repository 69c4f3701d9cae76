#pragma once

// Linearizability: result types, the path matrix and the exact LP oracle
// that decides whether B c' = b has a (nonnegative) solution.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qspp/instance.hpp"

namespace qspp {

enum class Verdict { kLinearizable, kNotLinearizable };

/// An s-t path whose quadratic cost differs from its cost under a
/// candidate linear vector.
struct PathMismatch {
  Path path;
  Rational expected;  ///< C(P, c, Q)
  Rational got;       ///< C(P, c')
};

/// Farkas certificate over the rows of a PathMatrix. With `nonnegative`
/// set it proves B c' = b, c' >= 0 infeasible: B^T y >= 0 and b^T y < 0.
/// Otherwise it proves B c' = b infeasible: B^T y = 0 and b^T y < 0.
struct FarkasCertificate {
  Vector y;
  Rational b_dot_y;
  bool nonnegative = true;
};

using Witness = std::variant<PathMismatch, FarkasCertificate>;

struct LinearizationResult {
  Verdict verdict = Verdict::kNotLinearizable;
  /// Present iff linearizable.
  std::optional<CostVector> vector;
  /// Present iff not linearizable.
  std::optional<Witness> witness;
  std::string detail;

  bool linearizable() const { return verdict == Verdict::kLinearizable; }

  static LinearizationResult accept(CostVector vector, std::string detail = {});
  static LinearizationResult reject(Witness witness, std::string detail = {});
};

/// Rows are the characteristic vectors of all s-t paths, shortest paths
/// first and lexicographic by arc id within one length; b holds the
/// quadratic path costs.
struct PathMatrix {
  Eigen::MatrixXi rows;
  Vector b;
  std::vector<Path> paths;

  int path_count() const { return static_cast<int>(paths.size()); }
  int arc_count() const { return static_cast<int>(rows.cols()); }
};

/// Throws LimitExceeded when there are more than `limit` s-t paths.
PathMatrix build_path_matrix(const QsppInstance& inst,
                             std::size_t limit = kDefaultPathLimit);

inline constexpr int kLpOracleMaxPaths = 1000;
inline constexpr int kLpOracleMaxArcs = 1000;

/// Exact feasibility of B c' = b (with c' >= 0 when `require_nonneg`).
/// Feasible: one solution. Infeasible: a verified Farkas certificate.
/// Throws PreconditionError beyond 1000 paths or 1000 arcs.
LinearizationResult lp_oracle(const PathMatrix& pm, bool require_nonneg);

/// B^T y >= 0 (or == 0) and b^T y < 0, recomputed from scratch.
bool verify_certificate(const PathMatrix& pm, const FarkasCertificate& cert);

/// First enumerated path on which `candidate` disagrees with the quadratic
/// cost, if any.
std::optional<PathMismatch> find_mismatch(const QsppInstance& inst,
                                          const CostVector& candidate,
                                          std::size_t limit = kDefaultPathLimit);

/// True iff C(P, c, Q) = C(P, candidate) on every s-t path.
bool reproduces_all_paths(const QsppInstance& inst, const CostVector& candidate,
                          std::size_t limit = kDefaultPathLimit);

}  // namespace qspp
