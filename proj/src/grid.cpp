#include "qspp/grid.hpp"

#include <algorithm>
#include <string>

#include "qspp/errors.hpp"

namespace qspp {
namespace {

void check_sub(const GridShape& g, SubGrid sub) {
  if (sub.rows < 1 || sub.cols < 1 || sub.rows > g.p || sub.cols > g.q ||
      sub.rows + sub.cols < 3) {
    throw std::invalid_argument("subgrid must lie inside the grid and contain an arc");
  }
}

GridShape require_grid(const QsppInstance& inst) {
  const std::optional<GridShape> g = recognize_grid(inst.graph);
  if (!g) throw PreconditionError("expected a directed grid graph");
  if (inst.s != g->source() || inst.t != g->sink()) {
    throw PreconditionError("grid instances need s in the top-left and t in the bottom-right corner");
  }
  return *g;
}

// Both reformulations keep every path cost: the interaction only enters
// through q_ef + q_fe, and q_ee acts as a linear cost.
void split_instance(const QsppInstance& inst, CostVector& c, InteractionMatrix& q) {
  q = (inst.q + inst.q.transpose()) / Rational(2);
  c = inst.c + q.diagonal();
  q.diagonal().setZero();
}

void append_down(const GridShape& g, std::vector<ArcId>& out, int col, int from_row, int to_row) {
  for (int i = from_row; i < to_row; ++i) out.push_back(g.down(i, col));
}

void append_right(const GridShape& g, std::vector<ArcId>& out, int row, int from_col, int to_col) {
  for (int j = from_col; j < to_col; ++j) out.push_back(g.right(row, j));
}

std::vector<ArcId> snake_order(const GridShape& g, SubGrid sub) {
  if (sub.cols == 1) return {g.down(0, 0)};
  std::vector<ArcId> order;
  order.push_back(g.right(0, 0));
  for (int i = 0; i + 1 < sub.rows; ++i) {
    for (int j = sub.cols - 2; j >= 0; --j) order.push_back(g.down(i, j));
  }
  return order;
}

}  // namespace

std::vector<ArcId> reduced_support(const GridShape& g, SubGrid sub) {
  check_sub(g, sub);
  std::vector<ArcId> out = snake_order(g, sub);
  std::sort(out.begin(), out.end());
  return out;
}

CostVector reduce_cost_vector(const GridShape& g, const CostVector& c, SubGrid sub,
                              TieOrder order) {
  check_sub(g, sub);
  if (c.size() != g.arc_count()) throw std::invalid_argument("cost vector length != arc count");
  const int r = sub.rows;
  const int k = sub.cols;
  CostVector out = CostVector::Zero(g.arc_count());
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i + 1 < r) out(g.down(i, j).index) = c(g.down(i, j).index);
      if (j + 1 < k) out(g.right(i, j).index) = c(g.right(i, j).index);
    }
  }
  for (int depth = r + k - 3; depth >= 1; --depth) {
    const int lo = std::max(0, depth - (r - 1));
    const int hi = std::min(k - 1, depth);
    for (int step = 0; step <= hi - lo; ++step) {
      const int j = order == TieOrder::kIncreasingColumn ? lo + step : hi - step;
      const int i = depth - j;
      const bool last_col = j == k - 1;
      const ArcId f = last_col ? g.down(i, j) : g.right(i, j);
      const Rational shift = out(f.index);
      if (shift == 0) continue;
      out(f.index) = 0;
      if (i > 0) out(g.down(i - 1, j).index) += shift;
      if (j > 0) out(g.right(i, j - 1).index) += shift;
      if (!last_col && i + 1 < r) out(g.down(i, j).index) -= shift;
    }
  }
  return out;
}

CostVector reduce_cost_vector(const QsppInstance& inst, TieOrder order) {
  const GridShape g = require_grid(inst);
  return reduce_cost_vector(g, inst.c, {g.p, g.q}, order);
}

std::vector<ArcId> critical_path(const GridShape& g, SubGrid sub, ArcId e) {
  check_sub(g, sub);
  const int r = sub.rows;
  const int k = sub.cols;
  std::vector<ArcId> out;
  if (k == 1) {
    if (e != g.down(0, 0)) throw std::invalid_argument("arc is not in the reduced support");
    append_down(g, out, 0, 0, r - 1);
    return out;
  }
  if (e == g.right(0, 0)) {
    append_right(g, out, 0, 0, k - 1);
    append_down(g, out, k - 1, 0, r - 1);
    return out;
  }
  for (int i = 0; i + 1 < r; ++i) {
    for (int j = 0; j + 1 < k; ++j) {
      if (g.down(i, j) != e) continue;
      append_down(g, out, 0, 0, i);
      append_right(g, out, i, 0, j);
      out.push_back(e);
      append_right(g, out, i + 1, j, k - 1);
      append_down(g, out, k - 1, i + 1, r - 1);
      return out;
    }
  }
  throw std::invalid_argument("arc is not in the reduced support");
}

std::map<ArcId, Path> critical_paths(int p, int q) {
  const Digraph graph = make_grid(p, q);
  const GridShape g{p, q};
  std::map<ArcId, Path> out;
  for (ArcId e : reduced_support(g, {p, q})) {
    out.emplace(e, Path::from_arcs(graph, critical_path(g, {p, q}, e)));
  }
  return out;
}

std::vector<std::pair<ArcId, Rational>> critical_path_costs(const GridShape& g,
                                                            const CostVector& c,
                                                            const InteractionMatrix& q,
                                                            SubGrid sub) {
  check_sub(g, sub);
  const std::vector<ArcId> order = snake_order(g, sub);
  std::vector<std::pair<ArcId, Rational>> out;
  out.reserve(order.size());

  std::vector<char> in_old(g.arc_count(), 0);
  std::vector<char> in_new(g.arc_count(), 0);
  std::vector<ArcId> current = critical_path(g, sub, order.front());
  Rational cost = path_cost(c, q, current);
  out.emplace_back(order.front(), cost);

  std::vector<ArcId> added;
  std::vector<ArcId> removed;
  std::vector<ArcId> shared;
  // Contribution of `group` to a path made of `group` and `rest`.
  const auto contribution = [&](const std::vector<ArcId>& group, const std::vector<ArcId>& rest) {
    Rational total = 0;
    for (ArcId a : group) {
      total += c(a.index);
      for (ArcId b : rest) total += q(a.index, b.index) + q(b.index, a.index);
      for (ArcId b : group) total += q(a.index, b.index);
    }
    return total;
  };

  for (std::size_t n = 1; n < order.size(); ++n) {
    std::vector<ArcId> next = critical_path(g, sub, order[n]);
    for (ArcId e : current) in_old[e.index] = 1;
    for (ArcId e : next) in_new[e.index] = 1;
    added.clear();
    removed.clear();
    shared.clear();
    for (ArcId e : next) (in_old[e.index] ? shared : added).push_back(e);
    for (ArcId e : current) {
      if (!in_new[e.index]) removed.push_back(e);
    }
    cost += contribution(added, shared) - contribution(removed, shared);
    for (ArcId e : current) in_old[e.index] = 0;
    for (ArcId e : next) in_new[e.index] = 0;
    current = std::move(next);
    out.emplace_back(order[n], cost);
  }
  return out;
}

CostVector pseudo_linearize(const GridShape& g, const CostVector& c, const InteractionMatrix& q,
                            SubGrid sub) {
  const auto costs = critical_path_costs(g, c, q, sub);
  CostVector out = CostVector::Zero(g.arc_count());
  if (sub.cols == 1) {
    out(g.down(0, 0).index) = costs.front().second;
    return out;
  }
  std::map<ArcId, Rational> cost(costs.begin(), costs.end());
  const ArcId corner = g.right(0, 0);
  out(corner.index) = cost[corner];
  if (sub.rows == 1) return out;
  for (int j = 0; j + 1 < sub.cols; ++j) {
    out(g.down(0, j).index) = cost[g.down(0, j)] - (j >= 1 ? out(corner.index) : Rational(0));
  }
  Rational first_column = out(g.down(0, 0).index);
  for (int i = 1; i + 1 < sub.rows; ++i) {
    for (int j = 0; j + 1 < sub.cols; ++j) {
      out(g.down(i, j).index) = cost[g.down(i, j)] - first_column;
    }
    first_column += out(g.down(i, 0).index);
  }
  return out;
}

CostVector pseudo_linearize(const QsppInstance& inst) {
  const GridShape g = require_grid(inst);
  return pseudo_linearize(g, inst.c, inst.q, {g.p, g.q});
}

namespace {

CostVector shrink(const GridShape& g, const CostVector& x, const InteractionMatrix& q, ArcId last) {
  CostVector out = x - Rational(2) * q.row(last.index).transpose();
  out(g.right(0, 0).index) += x(last.index);
  out(g.down(0, 0).index) += x(last.index);
  return out;
}

}  // namespace

CostVector shrink_target(const CostVector& linearization, const QsppInstance& inst, VertexId v) {
  if (linearization.size() != inst.arc_count()) {
    throw std::invalid_argument("cost vector length != arc count");
  }
  const std::vector<ArcId> last = inst.graph.find_arcs(v, inst.t);
  if (last.empty()) throw PreconditionError("no arc from v to the target");
  if (!is_acyclic(inst.graph)) throw PreconditionError("target shrinking requires an acyclic graph");
  const ArcId vt = last.front();
  CostVector out = linearization - Rational(2) * inst.q.row(vt.index).transpose();
  for (ArcId e : inst.graph.out_arcs(inst.s)) out(e.index) += linearization(vt.index);
  return out;
}

CostVector linearize_g2q(const GridShape& g, const CostVector& c, const InteractionMatrix& q,
                         SubGrid sub) {
  check_sub(g, sub);
  if (sub.rows != 2) throw PreconditionError("expected a grid with two rows");
  const int k = sub.cols;
  std::vector<Rational> cost(k);
  for (int col = 0; col < k; ++col) {
    std::vector<ArcId> path;
    append_right(g, path, 0, 0, col);
    path.push_back(g.down(0, col));
    append_right(g, path, 1, col, k - 1);
    cost[col] = path_cost(c, q, path);
  }
  CostVector out = CostVector::Zero(g.arc_count());
  out(g.down(0, 0).index) = cost[0];
  if (k == 1) return out;
  for (int col = 1; col + 1 < k; ++col) out(g.down(0, col).index) = cost[col] - cost[k - 1];
  out(g.right(0, 0).index) = cost[k - 1];
  return out;
}

CostVector linearize_g2q(const QsppInstance& inst) {
  const GridShape g = require_grid(inst);
  if (g.p != 2) throw PreconditionError("expected a grid with two rows");
  return linearize_g2q(g, inst.c, inst.q, {2, g.q});
}

LinearizationResult linearize_grid(const QsppInstance& inst) {
  const GridShape g = require_grid(inst);
  CostVector c;
  InteractionMatrix q;
  split_instance(inst, c, q);
  const CostVector zero = CostVector::Zero(g.arc_count());
  const CostVector pc0 = pseudo_linearize(g, zero, q, {g.p, g.q});

  // A mismatch on block `sub` means some critical path P of that block gets
  // the wrong cost from `candidate`. Each target shrink keeps the error of a
  // path unchanged once the removed arc is appended, so P followed by one
  // step down, the rest of that row and the last column fails on pc0 too.
  const auto reject = [&](SubGrid sub, const CostVector& candidate, const CostVector& expected) {
    for (ArcId e : reduced_support(g, sub)) {
      std::vector<ArcId> arcs = critical_path(g, sub, e);
      if (linear_cost(candidate, arcs) == linear_cost(expected, arcs)) continue;
      const int row = sub.rows - 1;
      const int col = sub.cols - 1;
      if (row + 1 < g.p) {
        arcs.push_back(g.down(row, col));
        append_right(g, arcs, row + 1, col, g.q - 1);
        append_down(g, arcs, g.q - 1, row + 1, g.p - 1);
      } else {
        append_right(g, arcs, row, col, g.q - 1);
      }
      Path path = Path::from_arcs(inst.graph, std::move(arcs));
      const CostVector pseudo = reduce_cost_vector(g, CostVector(pc0 + c), {g.p, g.q});
      PathMismatch mismatch{path, path_cost(inst, path), linear_cost(pseudo, path.arcs())};
      if (mismatch.expected == mismatch.got) {
        throw std::logic_error("internal error: grid witness path has matching costs");
      }
      return LinearizationResult::reject(
          std::move(mismatch), "pseudo-linearization disagrees on the " +
                                   std::to_string(sub.rows) + "x" + std::to_string(sub.cols) +
                                   " block ending at row " + std::to_string(sub.rows) +
                                   ", column " + std::to_string(sub.cols));
    }
    throw std::logic_error("internal error: reduced forms differ but critical paths agree");
  };

  CostVector current = pc0;
  for (int rows = g.p; rows >= 3; --rows) {
    const int row = rows - 1;
    std::vector<CostVector> up(g.q);
    CostVector x = current;
    for (int col = g.q - 1; col >= 0; --col) {
      up[col] = shrink(g, x, q, g.down(row - 1, col));
      if (col > 0) x = shrink(g, x, q, g.right(row, col - 1));
    }
    for (int col = 0; col + 1 < g.q; ++col) {
      const SubGrid sub{rows - 1, col + 1};
      const CostVector derived = reduce_cost_vector(g, up[col], sub);
      const CostVector pseudo = pseudo_linearize(g, zero, q, sub);
      if (derived != pseudo) return reject(sub, derived, pseudo);
    }
    current = reduce_cost_vector(g, up[g.q - 1], {rows - 1, g.q});
  }
  const SubGrid base{2, g.q};
  const CostVector derived = reduce_cost_vector(g, current, base);
  const CostVector direct = linearize_g2q(g, zero, q, base);
  if (derived != direct) return reject(base, derived, direct);

  return LinearizationResult::accept(reduce_cost_vector(g, CostVector(pc0 + c), {g.p, g.q}),
                                     "pseudo-linearization verified row by row");
}

}  // namespace qspp
