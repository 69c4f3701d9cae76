#include "qspp/complete.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qspp/errors.hpp"

namespace qspp {
namespace {

void require_simplified_complete(const QsppInstance& inst, int min_n) {
  if (inst.graph.vertex_count() < min_n || !is_simplified_complete(inst.graph, inst.s, inst.t)) {
    throw PreconditionError("expected a simplified complete symmetric digraph on at least " +
                            std::to_string(min_n) + " vertices");
  }
}

bool co_realizable(const Arc& a, const Arc& b) {
  if (a.head == b.head || a.tail == b.tail) return false;
  return !(a.head == b.tail && a.tail == b.head);
}

bool adjacent(const Arc& a, const Arc& b) { return a.tail == b.head || a.head == b.tail; }

Rational count(std::int64_t n, std::int64_t k, std::int64_t f) {
  if (k < 0 || f < 0) return 0;
  return Rational(binomial(n, k) * factorial(f));
}

}  // namespace

QsppInstance normalize_knstar(const QsppInstance& inst) {
  require_simplified_complete(inst, 3);
  QsppInstance out = inst;
  const int m = inst.arc_count();
  for (int e = 0; e < m; ++e) {
    for (int f = 0; f < m; ++f) {
      if (e != f && !co_realizable(inst.graph.arc({e}), inst.graph.arc({f}))) out.q(e, f) = 0;
    }
  }
  return out;
}

PathClassCosts path_class_costs(const QsppInstance& raw) {
  require_simplified_complete(raw, 4);
  const QsppInstance inst = normalize_knstar(raw);
  const Digraph& g = inst.graph;
  const int n = g.vertex_count();
  const int m = g.arc_count();
  const auto in_h = [&](int e) {
    const Arc& a = g.arc({e});
    return a.head == inst.s || a.tail == inst.t;
  };

  PathClassCosts out;
  for (Rational& v : out.sums.s) v = 0;
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      const int h = static_cast<int>(in_h(e)) + static_cast<int>(in_h(f));
      const int base = h == 2 ? 0 : h == 1 ? 2 : 4;
      const int cls = base + (adjacent(g.arc({e}), g.arc({f})) ? 0 : 1);
      out.sums.s[cls] += inst.q(e, f) + inst.q(f, e);
    }
  }

  // Linear part: c_e + q_ee counted once for every path through e.
  Rational linear_h = 0;
  Rational linear_inner = 0;
  for (int e = 0; e < m; ++e) {
    const Rational w = inst.c(e) + inst.q(e, e);
    (in_h(e) ? linear_h : linear_inner) += w;
  }

  for (int k = 2; k <= n - 1; ++k) {
    std::array<Rational, 6> t;
    t[0] = k == 2 ? 1 : 0;
    t[1] = k >= 3 ? count(n - 4, k - 3, k - 3) : 0;
    t[2] = t[1];
    t[3] = k >= 4 ? count(n - 5, k - 4, k - 3) : 0;
    t[4] = t[3];
    t[5] = k >= 5 ? count(n - 6, k - 5, k - 3) : 0;
    Rational cp = 0;
    for (int i = 0; i < 6; ++i) cp += t[i] * out.sums.s[i];
    const Rational g_h = count(n - 3, k - 2, k - 2);
    const Rational g_inner = k >= 3 ? count(n - 4, k - 3, k - 2) : Rational(0);
    cp += g_h * linear_h + g_inner * linear_inner;
    out.cp[k] = cp;
  }
  return out;
}

bool ConditionReport::any_violated() const {
  return std::any_of(checks.begin(), checks.end(), [](const ConditionCheck& c) { return !c.holds; });
}

ConditionReport check_necessary_conditions(const QsppInstance& inst) {
  ConditionReport report;
  report.cp = path_class_costs(inst).cp;
  const int n = inst.graph.vertex_count();
  const auto& cp = report.cp;
  for (int k = 2; k <= n - 2; ++k) {
    ConditionCheck c;
    c.kind = 'a';
    c.k = k;
    c.lhs = cp.at(k);
    c.rhs = cp.at(k + 1) / Rational(n - k - 1);
    c.holds = c.lhs <= c.rhs;
    report.checks.push_back(std::move(c));
  }
  if (n >= 5) {
    for (int k = 4; k <= n - 1; ++k) {
      ConditionCheck c;
      c.kind = 'b';
      c.k = k;
      c.lhs = cp.at(k);
      c.rhs = Rational(n - k) * Rational(k - 2) / Rational(k - 3) * cp.at(k - 1);
      c.holds = c.lhs <= c.rhs;
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

LinearizationResult k4_linearize(const QsppInstance& inst) {
  if (inst.graph.vertex_count() != 4) throw PreconditionError("expected simplified K_4^*");
  require_simplified_complete(inst, 4);
  const Digraph& g = inst.graph;
  std::vector<VertexId> inner;
  for (int v = 0; v < 4; ++v) {
    if (VertexId{v} != inst.s && VertexId{v} != inst.t) inner.push_back({v});
  }
  const VertexId u = inner[0];
  const VertexId w = inner[1];
  const auto arc = [&](VertexId from, VertexId to) { return g.find_arcs(from, to).front(); };
  const ArcId a = arc(inst.s, u);
  const ArcId b = arc(inst.s, w);
  const ArcId x = arc(u, w);
  const ArcId y = arc(w, u);
  const ArcId d = arc(u, inst.t);
  const ArcId e = arc(w, inst.t);
  const std::array<std::vector<ArcId>, 4> paths = {
      std::vector<ArcId>{a, d}, {b, e}, {a, x, e}, {b, y, d}};
  std::array<Rational, 4> cost;
  for (int i = 0; i < 4; ++i) cost[i] = path_cost(inst.c, inst.q, paths[i]);
  const auto& [c1, c2, c3, c4] = cost;

  const auto certificate = [&](const std::array<int, 4>& weights) {
    const PathMatrix pm = build_path_matrix(inst);
    FarkasCertificate cert;
    cert.nonnegative = true;
    cert.y = Vector::Zero(pm.path_count());
    for (int r = 0; r < pm.path_count(); ++r) {
      for (int i = 0; i < 4; ++i) {
        if (pm.paths[r].arcs() == paths[i]) cert.y(r) = weights[i];
      }
    }
    cert.b_dot_y = pm.b.dot(cert.y);
    if (!verify_certificate(pm, cert)) {
      throw std::logic_error("internal error: K4 certificate failed verification");
    }
    return cert;
  };

  for (int i = 0; i < 4; ++i) {
    if (cost[i] < 0) {
      std::array<int, 4> unit{};
      unit[i] = 1;
      return LinearizationResult::reject(certificate(unit),
                                         "path P" + std::to_string(i + 1) + " has negative cost");
    }
  }
  if (c1 + c2 > c3 + c4) {
    return LinearizationResult::reject(
        certificate({-1, -1, 1, 1}),
        "C(P1) + C(P2) = " + to_string(c1 + c2) + " > C(P3) + C(P4) = " + to_string(c3 + c4));
  }

  CostVector out = CostVector::Zero(inst.arc_count());
  std::string which;
  if (c1 > c3) {
    out(a.index) = c3;
    out(b.index) = c2;
    out(d.index) = c1 - c3;
    out(y.index) = c4 + c3 - c1 - c2;
    which = "C(P1) > C(P3)";
  } else if (c2 > c4) {
    out(a.index) = c1;
    out(b.index) = c4;
    out(e.index) = c2 - c4;
    out(x.index) = c3 + c4 - c1 - c2;
    which = "C(P2) > C(P4)";
  } else {
    out(a.index) = c1;
    out(b.index) = c2;
    out(x.index) = c3 - c1;
    out(y.index) = c4 - c2;
    which = "C(P1) <= C(P3) and C(P2) <= C(P4)";
  }
  return LinearizationResult::accept(std::move(out), which);
}

LinearizationResult tournament4_linearize(const QsppInstance& inst) {
  if (inst.graph.vertex_count() != 4 || !is_tournament(inst.graph)) {
    throw PreconditionError("expected a tournament on 4 vertices");
  }
  if ((inst.c.array() >= Rational(0)).all() && reproduces_all_paths(inst, inst.c)) {
    return LinearizationResult::accept(inst.c, "c reproduces every path cost");
  }
  return lp_oracle(build_path_matrix(inst), true);
}

QsppInstance make_k4_example() {
  QsppInstance inst(make_complete_symmetric(4, true, {0}, {3}), {0}, {3});
  const Digraph& g = inst.graph;
  const auto arc = [&](int u, int v) { return g.find_arcs({u}, {v}).front(); };
  set_interaction(inst.q, arc(0, 1), arc(1, 3), Rational(1));
  set_interaction(inst.q, arc(0, 2), arc(2, 3), Rational(1));
  return inst;
}

QsppInstance make_k5_example() {
  QsppInstance inst(make_complete_symmetric(5, true, {0}, {4}), {0}, {4});
  const Digraph& g = inst.graph;
  set_interaction(inst.q, g.find_arcs({2}, {3}).front(), g.find_arcs({3}, {4}).front(),
                  Rational(1));
  return inst;
}

}  // namespace qspp
