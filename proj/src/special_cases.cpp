#include "qspp/special_cases.hpp"

#include <algorithm>
#include <limits>

#include "qspp/errors.hpp"

namespace qspp {

std::optional<WeakSumWitness> detect_weak_sum(const InteractionMatrix& q) {
  const Eigen::Index m = q.rows();
  if (q.cols() != m) return std::nullopt;
  Vector a = Vector::Zero(m);
  if (m == 2) {
    if (q(0, 1) != q(1, 0)) return std::nullopt;
    a(0) = a(1) = q(0, 1) / 2;
    return WeakSumWitness{a};
  }
  if (m >= 3) {
    a(0) = (q(0, 1) + q(0, 2) - q(1, 2)) / 2;
    for (Eigen::Index e = 1; e < m; ++e) a(e) = q(0, e) - a(0);
    for (Eigen::Index e = 0; e < m; ++e) {
      for (Eigen::Index f = 0; f < m; ++f) {
        if (e != f && q(e, f) != a(e) + a(f)) return std::nullopt;
      }
    }
  }
  return WeakSumWitness{a};
}

InteractionMatrix weak_sum_matrix(const Vector& a) {
  const Eigen::Index m = a.size();
  InteractionMatrix q(m, m);
  for (Eigen::Index e = 0; e < m; ++e) {
    for (Eigen::Index f = 0; f < m; ++f) q(e, f) = e == f ? Rational(0) : a(e) + a(f);
  }
  return q;
}

std::optional<int> all_paths_equal_length(const Digraph& g, VertexId s, VertexId t) {
  const auto order = topological_order(g);
  if (!order) {
    const PathEnumeration all = enumerate_st_paths(g, s, t);
    if (all.overflow) throw LimitExceeded("too many s-t paths to compare lengths");
    if (all.paths.empty()) throw NoPathError("no s-t path exists");
    const int length = all.paths.front().length();
    for (const Path& p : all.paths) {
      if (p.length() != length) return std::nullopt;
    }
    return length;
  }
  const auto from_s = reachable_from(g, s);
  const auto to_t = reaching(g, t);
  if (!from_s[t.index]) throw NoPathError("no s-t path exists");
  const auto on_st_path = [&](VertexId v) { return from_s[v.index] && to_t[v.index]; };

  constexpr int kUnset = std::numeric_limits<int>::min();
  std::vector<int> shortest(g.vertex_count(), kUnset);
  std::vector<int> longest(g.vertex_count(), kUnset);
  shortest[s.index] = longest[s.index] = 0;
  for (VertexId v : *order) {
    if (!on_st_path(v) || shortest[v.index] == kUnset) continue;
    for (ArcId e : g.out_arcs(v)) {
      const VertexId w = g.arc(e).tail;
      if (!on_st_path(w)) continue;
      const int lo = shortest[v.index] + 1;
      const int hi = longest[v.index] + 1;
      shortest[w.index] = shortest[w.index] == kUnset ? lo : std::min(shortest[w.index], lo);
      longest[w.index] = std::max(longest[w.index], hi);
    }
  }
  if (shortest[t.index] != longest[t.index]) return std::nullopt;
  return shortest[t.index];
}

CostVector linearize_weak_sum(const QsppInstance& inst) {
  const auto witness = detect_weak_sum(inst.q);
  if (!witness) throw PreconditionError("interaction matrix is not a symmetric weak-sum matrix");
  const auto length = all_paths_equal_length(inst.graph, inst.s, inst.t);
  if (!length) throw PreconditionError("s-t paths do not all have the same length");
  return Rational(2 * (*length - 1)) * witness->a + inst.c + CostVector(inst.q.diagonal());
}

ProductCheck check_product(const InteractionMatrix& q, const CostVector& c) {
  const Eigen::Index m = q.rows();
  ProductCheck result;
  if (q.cols() != m || c.size() != m) return result;
  Matrix mat = q;
  mat.diagonal() += c;
  // Nonnegative rank one <=> entries >= 0 and every 2x2 principal minor
  // M_ef^2 = M_ee * M_ff.
  for (Eigen::Index e = 0; e < m; ++e) {
    for (Eigen::Index f = 0; f < m; ++f) {
      if (mat(e, f) < 0 || mat(e, f) != mat(f, e)) return result;
      if (mat(e, f) * mat(e, f) != mat(e, e) * mat(f, f)) return result;
    }
  }
  Vector a(m);
  for (Eigen::Index e = 0; e < m; ++e) {
    if (!exact_sqrt(mat(e, e), a(e))) {
      result.status = ProductStatus::kIrrational;
      return result;
    }
  }
  result.status = ProductStatus::kProduct;
  result.witness = ProductWitness{a};
  return result;
}

std::optional<ProductWitness> detect_product(const InteractionMatrix& q,
                                             const CostVector& c) {
  return check_product(q, c).witness;
}

Solution solve_product_case(const QsppInstance& inst) {
  const ProductCheck check = check_product(inst.q, inst.c);
  if (check.status == ProductStatus::kIrrational) {
    throw PreconditionError(
        "Q + Diag(c) is rank one but its factor is not rational");
  }
  if (!check.witness) {
    throw PreconditionError("Q + Diag(c) is not a nonnegative symmetric product matrix");
  }
  Solution sol = spp_solve(SppInstance(inst.graph, inst.s, inst.t, check.witness->a));
  sol.cost = sol.cost * sol.cost;
  return sol;
}

CostVector linearize_directed_cycle(const QsppInstance& inst) {
  if (!is_directed_cycle(inst.graph)) throw PreconditionError("graph is not a directed cycle");
  std::vector<ArcId> arcs;
  for (VertexId v = inst.s; v != inst.t;) {
    const ArcId e = inst.graph.out_arcs(v).front();
    arcs.push_back(e);
    v = inst.graph.arc(e).tail;
  }
  CostVector result = CostVector::Zero(inst.arc_count());
  result(arcs.front().index) = path_cost(inst.c, inst.q, arcs);
  return result;
}

}  // namespace qspp
