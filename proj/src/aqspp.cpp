#include "qspp/aqspp.hpp"

#include <utility>

#include "qspp/errors.hpp"

namespace qspp {

bool is_adjacent_qspp(const QsppInstance& inst) {
  const int m = inst.arc_count();
  for (int e = 0; e < m; ++e) {
    for (int f = 0; f < m; ++f) {
      if (e == f || inst.q(e, f) == 0) continue;
      const Arc& a = inst.graph.arc({e});
      const Arc& b = inst.graph.arc({f});
      const bool forward = a.tail == b.head && a.head != b.tail;
      const bool backward = a.head == b.tail && a.tail != b.head;
      if (!forward && !backward) return false;
    }
  }
  return true;
}

AuxiliaryGraph build_auxiliary(const QsppInstance& inst) {
  if (!is_adjacent_qspp(inst)) {
    throw PreconditionError("interaction between non-adjacent arcs is not zero");
  }
  const Digraph& g = inst.graph;
  const int m = g.arc_count();
  const int sink = m + 1;
  std::vector<Arc> arcs;
  std::vector<Rational> costs;

  for (ArcId f : g.out_arcs(inst.s)) {
    arcs.push_back({{0}, {f.index + 1}, {}});
    costs.push_back(inst.c(f.index) + inst.q(f.index, f.index));
  }
  for (int e = 0; e < m; ++e) {
    const Arc& a = g.arc({e});
    for (ArcId f : g.out_arcs(a.tail)) {
      if (g.arc(f).tail == a.head) continue;
      arcs.push_back({{e + 1}, {f.index + 1}, {}});
      costs.push_back(inst.c(f.index) + inst.q(f.index, f.index) + inst.q(e, f.index) +
                      inst.q(f.index, e));
    }
    if (a.tail == inst.t) {
      arcs.push_back({{e + 1}, {sink}, {}});
      costs.push_back(Rational(0));
    }
  }

  AuxiliaryGraph aux;
  aux.graph = Digraph(m + 2, std::move(arcs));
  aux.cost = CostVector(static_cast<Eigen::Index>(costs.size()));
  for (std::size_t k = 0; k < costs.size(); ++k) aux.cost(static_cast<Eigen::Index>(k)) = costs[k];
  aux.original_arc.assign(m + 2, std::nullopt);
  for (int e = 0; e < m; ++e) aux.original_arc[e + 1] = ArcId{e};
  return aux;
}

AuxiliaryWalk auxiliary_shortest_walk(const QsppInstance& inst) {
  const AuxiliaryGraph aux = build_auxiliary(inst);
  const Solution lifted =
      spp_solve(SppInstance(aux.graph, aux.source(), aux.sink(), aux.cost));
  AuxiliaryWalk walk;
  walk.cost = lifted.cost;
  for (VertexId v : lifted.path.vertices()) {
    if (const auto& e = aux.original_arc[v.index]) walk.arcs.push_back(*e);
  }
  std::vector<bool> seen(inst.graph.vertex_count(), false);
  walk.is_simple_path = true;
  seen[inst.s.index] = true;
  for (ArcId e : walk.arcs) {
    const int w = inst.graph.arc(e).tail.index;
    if (seen[w]) walk.is_simple_path = false;
    seen[w] = true;
  }
  return walk;
}

Solution solve_aqspp(const QsppInstance& inst) {
  if (!is_acyclic(inst.graph)) {
    throw PreconditionError(
        "adjacent-QSPP auxiliary-graph reduction requires an acyclic graph: on "
        "cyclic graphs the auxiliary shortest path may map to a walk, not an s-t "
        "path");
  }
  AuxiliaryWalk walk = auxiliary_shortest_walk(inst);
  Path path = Path::from_arcs(inst.graph, std::move(walk.arcs));
  return {std::move(path), walk.cost};
}

QsppInstance make_cyclic_counterexample(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");
  Digraph g(5, {{{0}, {1}, "1->2"},
                {{1}, {2}, "2->3"},
                {{2}, {3}, "3->4"},
                {{3}, {1}, "4->2"},
                {{1}, {4}, "2->5"}});
  QsppInstance inst(std::move(g), {0}, {4});
  inst.c(2) = epsilon;
  set_interaction(inst.q, {0}, {4}, Rational(1));
  return inst;
}

}  // namespace qspp
