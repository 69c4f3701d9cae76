#include "qspp/instance.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <utility>

#include "qspp/errors.hpp"

namespace qspp {
namespace {

void check_path(const QsppInstance& inst, const Path& p) {
  for (ArcId e : p.arcs()) {
    if (!inst.graph.valid(e)) throw std::invalid_argument("path uses an unknown arc");
  }
  // Re-validate chaining against this graph; a Path may come from another one.
  const Path checked = Path::from_arcs(inst.graph, p.arcs());
  if (checked.source() != inst.s || checked.target() != inst.t) {
    throw std::invalid_argument("path does not run from s to t");
  }
}

Path trace_back(const Digraph& g, VertexId s, VertexId t,
                const std::vector<int>& pred_arc) {
  std::vector<ArcId> arcs;
  for (VertexId v = t; v != s;) {
    const ArcId e{pred_arc[v.index]};
    arcs.push_back(e);
    v = g.arc(e).head;
  }
  std::reverse(arcs.begin(), arcs.end());
  return Path::from_arcs(g, std::move(arcs));
}

}  // namespace

QsppInstance::QsppInstance(Digraph graph_, VertexId s_, VertexId t_, CostVector c_,
                           InteractionMatrix q_)
    : graph(std::move(graph_)), s(s_), t(t_), c(std::move(c_)), q(std::move(q_)) {
  const int m = graph.arc_count();
  if (c.size() != m) throw std::invalid_argument("cost vector length differs from arc count");
  if (q.rows() != m || q.cols() != m) {
    throw std::invalid_argument("interaction matrix is not m x m");
  }
  if (!graph.valid(s) || !graph.valid(t)) throw std::invalid_argument("s or t out of range");
  if (s == t) throw std::invalid_argument("s and t must differ");
}

QsppInstance::QsppInstance(Digraph graph_, VertexId s_, VertexId t_)
    : QsppInstance(graph_, s_, t_, CostVector::Zero(graph_.arc_count()),
                   InteractionMatrix::Zero(graph_.arc_count(), graph_.arc_count())) {}

bool operator==(const QsppInstance& a, const QsppInstance& b) {
  return a.graph.same_structure(b.graph) && a.s == b.s && a.t == b.t && a.c == b.c &&
         a.q == b.q;
}

SppInstance::SppInstance(Digraph graph_, VertexId s_, VertexId t_, CostVector c_)
    : graph(std::move(graph_)), s(s_), t(t_), c(std::move(c_)) {
  if (c.size() != graph.arc_count()) {
    throw std::invalid_argument("cost vector length differs from arc count");
  }
  if (!graph.valid(s) || !graph.valid(t)) throw std::invalid_argument("s or t out of range");
  if (s == t) throw std::invalid_argument("s and t must differ");
}

void set_interaction(InteractionMatrix& q, ArcId e, ArcId f, const Rational& value) {
  q(e.index, f.index) = value;
  q(f.index, e.index) = value;
}

Rational path_cost(const QsppInstance& inst, const Path& p) {
  check_path(inst, p);
  return path_cost(inst.c, inst.q, p.arcs());
}

Rational quadratic_form_cost(const QsppInstance& inst, const Path& p) {
  check_path(inst, p);
  const Vector x = p.characteristic_vector(inst.arc_count()).cast<Rational>();
  return x.dot(inst.q * x) + inst.c.dot(x);
}

Solution brute_force_solve(const QsppInstance& inst, std::size_t limit) {
  PathEnumeration all = enumerate_st_paths(inst.graph, inst.s, inst.t, limit);
  if (all.overflow) {
    throw LimitExceeded("more than " + std::to_string(limit) + " s-t paths");
  }
  if (all.paths.empty()) throw NoPathError("no s-t path exists");
  std::size_t best = 0;
  Rational best_cost = path_cost(inst.c, inst.q, all.paths[0].arcs());
  for (std::size_t k = 1; k < all.paths.size(); ++k) {
    Rational cost = path_cost(inst.c, inst.q, all.paths[k].arcs());
    if (cost < best_cost) {
      best = k;
      best_cost = std::move(cost);
    }
  }
  return {std::move(all.paths[best]), best_cost};
}

Solution spp_solve(const SppInstance& inst) {
  const Digraph& g = inst.graph;
  const int n = g.vertex_count();
  const bool nonnegative = (inst.c.array() >= Rational(0)).all();
  std::vector<bool> reached(n, false);
  std::vector<Rational> dist(n);
  std::vector<int> pred_arc(n, -1);
  reached[inst.s.index] = true;
  dist[inst.s.index] = 0;

  const auto relax = [&](ArcId e) {
    const Arc& a = g.arc(e);
    const Rational candidate = dist[a.head.index] + inst.c(e.index);
    if (!reached[a.tail.index] || candidate < dist[a.tail.index]) {
      reached[a.tail.index] = true;
      dist[a.tail.index] = candidate;
      pred_arc[a.tail.index] = e.index;
      return true;
    }
    return false;
  };

  if (nonnegative) {
    using Entry = std::pair<Rational, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    std::vector<bool> done(n, false);
    heap.push({Rational(0), inst.s.index});
    while (!heap.empty()) {
      const int v = heap.top().second;
      heap.pop();
      if (done[v]) continue;
      done[v] = true;
      for (ArcId e : g.out_arcs({v})) {
        const int w = g.arc(e).tail.index;
        if (!done[w] && relax(e)) heap.push({dist[w], w});
      }
    }
  } else {
    const auto order = topological_order(g);
    if (!order) {
      throw PreconditionError(
          "negative arc costs are only supported on acyclic graphs");
    }
    for (VertexId v : *order) {
      if (!reached[v.index]) continue;
      for (ArcId e : g.out_arcs(v)) relax(e);
    }
  }
  if (!reached[inst.t.index]) throw NoPathError("t is not reachable from s");
  return {trace_back(g, inst.s, inst.t, pred_arc), dist[inst.t.index]};
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

bool is_symmetric(const InteractionMatrix& q) {
  return q.rows() == q.cols() && q == q.transpose();
}

ValidationReport validate_parts(const Digraph& g, VertexId s, VertexId t,
                                const CostVector& c, const InteractionMatrix& q,
                                bool as_problem) {
  ValidationReport report;
  const int m = g.arc_count();
  if (c.size() != m || q.rows() != m || q.cols() != m) {
    report.violations.push_back(
        {ViolationKind::kDimension, "cost dimensions do not match the arc count " +
                                        std::to_string(m)});
    return report;
  }
  if (!g.valid(s) || !g.valid(t) || s == t) {
    report.violations.push_back({ViolationKind::kEndpoint, "s and t must be distinct vertices"});
  }
  for (int e = 0; e < m; ++e) {
    if (q(e, e) != 0) {
      report.violations.push_back({ViolationKind::kNonzeroDiagonal,
                                   "q(" + std::to_string(e) + "," + std::to_string(e) +
                                       ") = " + to_string(q(e, e))});
    }
    for (int f = e + 1; f < m; ++f) {
      if (q(e, f) != q(f, e)) {
        report.violations.push_back(
            {ViolationKind::kAsymmetric, "q(" + std::to_string(e) + "," + std::to_string(f) +
                                             ") != q(" + std::to_string(f) + "," +
                                             std::to_string(e) + ")"});
      }
    }
  }
  if (as_problem) {
    for (int e = 0; e < m; ++e) {
      if (c(e) < 0) {
        report.violations.push_back({ViolationKind::kNegativeLinearCost,
                                     "c(" + std::to_string(e) + ") = " + to_string(c(e))});
      }
      for (int f = 0; f < m; ++f) {
        if (q(e, f) < 0) {
          report.violations.push_back({ViolationKind::kNegativeInteraction,
                                       "q(" + std::to_string(e) + "," + std::to_string(f) +
                                           ") = " + to_string(q(e, f))});
        }
      }
    }
  }
  return report;
}

ValidationReport validate_instance(const QsppInstance& inst, bool as_problem) {
  return validate_parts(inst.graph, inst.s, inst.t, inst.c, inst.q, as_problem);
}

}  // namespace qspp
