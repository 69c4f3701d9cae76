#include "qspp/linearization.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "qspp/errors.hpp"

namespace qspp {
namespace {

// Gauss-Jordan on [B | b | I]. The identity block records which row
// combination produced each reduced row, which is the certificate when a
// zero row of B meets a nonzero entry of b.
LinearizationResult solve_unrestricted(const PathMatrix& pm) {
  const int r = pm.path_count();
  const int m = pm.arc_count();
  const int rhs = m;
  Matrix t = Matrix::Zero(r, m + 1 + r);
  t.leftCols(m) = pm.rows.cast<Rational>();
  t.col(rhs) = pm.b;
  t.rightCols(r).setIdentity();

  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < m && row < r; ++col) {
    int found = -1;
    for (int i = row; i < r; ++i) {
      if (t(i, col) != 0) {
        found = i;
        break;
      }
    }
    if (found < 0) continue;
    t.row(row).swap(t.row(found));
    const Rational pivot = t(row, col);
    t.row(row) /= pivot;
    for (int i = 0; i < r; ++i) {
      if (i == row || t(i, col) == 0) continue;
      const Rational factor = t(i, col);
      t.row(i) -= factor * t.row(row);
    }
    pivot_cols.push_back(col);
    ++row;
  }

  for (int i = row; i < r; ++i) {
    if (t(i, rhs) == 0) continue;
    FarkasCertificate cert;
    cert.nonnegative = false;
    cert.y = t.row(i).tail(r).transpose();
    cert.b_dot_y = t(i, rhs);
    if (cert.b_dot_y > 0) {
      cert.y = -cert.y;
      cert.b_dot_y = -cert.b_dot_y;
    }
    if (!verify_certificate(pm, cert)) {
      throw std::logic_error("internal error: unrestricted certificate failed verification");
    }
    return LinearizationResult::reject(cert, "B c' = b has no solution");
  }

  CostVector x = CostVector::Zero(m);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    x(pivot_cols[k]) = t(static_cast<Eigen::Index>(k), rhs);
  }
  return LinearizationResult::accept(std::move(x));
}

// Phase-one simplex with Bland's rule on [D B | I] x = D b, where D flips
// rows with negative right-hand side. Artificial columns stay in the
// tableau so the final duals can be read off their reduced costs.
LinearizationResult solve_nonnegative(const PathMatrix& pm) {
  const int r = pm.path_count();
  const int m = pm.arc_count();
  const int cols = m + r;
  const int rhs = cols;
  const int obj = r;
  Matrix t = Matrix::Zero(r + 1, cols + 1);
  std::vector<int> sign(r, 1);
  std::vector<int> basis(r);
  for (int i = 0; i < r; ++i) {
    sign[i] = pm.b(i) < 0 ? -1 : 1;
    for (int j = 0; j < m; ++j) t(i, j) = sign[i] * pm.rows(i, j);
    t(i, m + i) = 1;
    t(i, rhs) = sign[i] * pm.b(i);
    basis[i] = m + i;
  }
  for (int j = 0; j < m; ++j) t(obj, j) = -t.col(j).head(r).sum();
  t(obj, rhs) = -t.col(rhs).head(r).sum();

  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (t(obj, j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best_ratio;
    for (int i = 0; i < r; ++i) {
      if (t(i, enter) <= 0) continue;
      Rational ratio = t(i, rhs) / t(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave < 0) throw std::logic_error("internal error: phase-one LP unbounded");
    const Rational pivot = t(leave, enter);
    t.row(leave) /= pivot;
    for (int i = 0; i <= r; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      const Rational factor = t(i, enter);
      t.row(i) -= factor * t.row(leave);
    }
    basis[leave] = enter;
  }

  const Rational infeasibility = -t(obj, rhs);
  if (infeasibility > 0) {
    FarkasCertificate cert;
    cert.nonnegative = true;
    cert.y = Vector(r);
    for (int i = 0; i < r; ++i) cert.y(i) = -sign[i] * (1 - t(obj, m + i));
    cert.b_dot_y = pm.b.dot(cert.y);
    if (!verify_certificate(pm, cert)) {
      throw std::logic_error("internal error: Farkas certificate failed verification");
    }
    return LinearizationResult::reject(cert, "B c' = b, c' >= 0 has no solution");
  }

  CostVector x = CostVector::Zero(m);
  for (int i = 0; i < r; ++i) {
    if (basis[i] < m) x(basis[i]) = t(i, rhs);
  }
  return LinearizationResult::accept(std::move(x));
}

}  // namespace

LinearizationResult LinearizationResult::accept(CostVector vector, std::string detail) {
  LinearizationResult r;
  r.verdict = Verdict::kLinearizable;
  r.vector = std::move(vector);
  r.detail = std::move(detail);
  return r;
}

LinearizationResult LinearizationResult::reject(Witness witness, std::string detail) {
  LinearizationResult r;
  r.verdict = Verdict::kNotLinearizable;
  r.witness = std::move(witness);
  r.detail = std::move(detail);
  return r;
}

PathMatrix build_path_matrix(const QsppInstance& inst, std::size_t limit) {
  PathEnumeration all = enumerate_st_paths(inst.graph, inst.s, inst.t, limit);
  if (all.overflow) throw LimitExceeded("more than " + std::to_string(limit) + " s-t paths");
  // Enumeration order is already lexicographic; a stable sort by length
  // keeps it within each length class.
  std::stable_sort(all.paths.begin(), all.paths.end(),
                   [](const Path& a, const Path& b) { return a.length() < b.length(); });
  PathMatrix pm;
  const int r = static_cast<int>(all.paths.size());
  pm.rows = Eigen::MatrixXi::Zero(r, inst.arc_count());
  pm.b = Vector(r);
  for (int i = 0; i < r; ++i) {
    for (ArcId e : all.paths[i].arcs()) pm.rows(i, e.index) = 1;
    pm.b(i) = path_cost(inst.c, inst.q, all.paths[i].arcs());
  }
  pm.paths = std::move(all.paths);
  return pm;
}

LinearizationResult lp_oracle(const PathMatrix& pm, bool require_nonneg) {
  if (pm.path_count() > kLpOracleMaxPaths || pm.arc_count() > kLpOracleMaxArcs) {
    throw PreconditionError("path matrix exceeds the LP oracle's desk-scale limit");
  }
  if (pm.path_count() == 0) return LinearizationResult::accept(CostVector::Zero(pm.arc_count()));
  LinearizationResult result = require_nonneg ? solve_nonnegative(pm) : solve_unrestricted(pm);
  if (result.vector) {
    const Vector check = pm.rows.cast<Rational>() * *result.vector;
    if (check != pm.b) throw std::logic_error("internal error: LP solution does not satisfy B c' = b");
    if (require_nonneg && (result.vector->array() < Rational(0)).any()) {
      throw std::logic_error("internal error: LP solution has a negative entry");
    }
  }
  return result;
}

bool verify_certificate(const PathMatrix& pm, const FarkasCertificate& cert) {
  if (cert.y.size() != pm.path_count()) return false;
  const Vector bty = pm.rows.cast<Rational>().transpose() * cert.y;
  const Rational value = pm.b.dot(cert.y);
  if (value != cert.b_dot_y || value >= 0) return false;
  if (cert.nonnegative) return (bty.array() >= Rational(0)).all();
  return (bty.array() == Rational(0)).all();
}

std::optional<PathMismatch> find_mismatch(const QsppInstance& inst,
                                          const CostVector& candidate, std::size_t limit) {
  PathEnumeration all = enumerate_st_paths(inst.graph, inst.s, inst.t, limit);
  if (all.overflow) throw LimitExceeded("more than " + std::to_string(limit) + " s-t paths");
  for (Path& p : all.paths) {
    Rational expected = path_cost(inst.c, inst.q, p.arcs());
    Rational got = linear_cost(candidate, p.arcs());
    if (expected != got) return PathMismatch{std::move(p), std::move(expected), std::move(got)};
  }
  return std::nullopt;
}

bool reproduces_all_paths(const QsppInstance& inst, const CostVector& candidate,
                          std::size_t limit) {
  return !find_mismatch(inst, candidate, limit).has_value();
}

}  // namespace qspp
