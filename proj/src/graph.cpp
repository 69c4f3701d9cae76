#include "qspp/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

#include "qspp/errors.hpp"

namespace qspp {

Digraph::Digraph(int vertex_count, std::vector<Arc> arcs)
    : vertex_count_(vertex_count),
      arcs_(std::move(arcs)),
      out_(vertex_count),
      in_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (int e = 0; e < arc_count(); ++e) {
    const Arc& a = arcs_[e];
    if (!valid(a.head) || !valid(a.tail)) {
      throw std::invalid_argument("arc " + std::to_string(e) +
                                  " references a missing vertex");
    }
    if (a.head == a.tail) {
      throw std::invalid_argument("arc " + std::to_string(e) + " is a self-loop");
    }
    out_[a.head.index].push_back({e});
    in_[a.tail.index].push_back({e});
  }
}

std::vector<ArcId> Digraph::find_arcs(VertexId u, VertexId v) const {
  std::vector<ArcId> found;
  for (ArcId e : out_arcs(u)) {
    if (arc(e).tail == v) found.push_back(e);
  }
  return found;
}

bool Digraph::same_structure(const Digraph& other) const {
  if (vertex_count_ != other.vertex_count_ || arc_count() != other.arc_count()) {
    return false;
  }
  for (int e = 0; e < arc_count(); ++e) {
    if (arcs_[e].head != other.arcs_[e].head || arcs_[e].tail != other.arcs_[e].tail) {
      return false;
    }
  }
  return true;
}

Path Path::from_arcs(const Digraph& g, std::vector<ArcId> arcs) {
  if (arcs.empty()) throw std::invalid_argument("a path needs at least one arc");
  Path p;
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    if (!g.valid(arcs[k])) {
      throw std::invalid_argument("unknown arc " + std::to_string(arcs[k].index));
    }
    const Arc& a = g.arc(arcs[k]);
    if (k == 0) {
      p.vertices_.push_back(a.head);
      seen[a.head.index] = true;
    } else if (a.head != p.vertices_.back()) {
      throw std::invalid_argument("arcs do not chain at position " + std::to_string(k));
    }
    if (seen[a.tail.index]) {
      throw std::invalid_argument("vertex " + std::to_string(a.tail.index) +
                                  " repeats on the path");
    }
    seen[a.tail.index] = true;
    p.vertices_.push_back(a.tail);
  }
  p.arcs_ = std::move(arcs);
  return p;
}

Path Path::from_vertices(const Digraph& g, const std::vector<VertexId>& vertices) {
  std::vector<ArcId> arcs;
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    const auto found = g.find_arcs(vertices[k], vertices[k + 1]);
    if (found.empty()) {
      throw std::invalid_argument("no arc " + std::to_string(vertices[k].index) +
                                  " -> " + std::to_string(vertices[k + 1].index));
    }
    arcs.push_back(found.front());
  }
  return from_arcs(g, std::move(arcs));
}

bool Path::contains(ArcId e) const {
  return std::find(arcs_.begin(), arcs_.end(), e) != arcs_.end();
}

Eigen::VectorXi Path::characteristic_vector(int arc_count) const {
  Eigen::VectorXi x = Eigen::VectorXi::Zero(arc_count);
  for (ArcId e : arcs_) x(e.index) = 1;
  return x;
}

Digraph make_grid(int p, int q) {
  if (p < 2 || q < 2) throw std::invalid_argument("grid needs p, q >= 2");
  const GridShape g{p, q};
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (int i = 0; i + 1 < p; ++i) {
    for (int j = 0; j < q; ++j) arcs.push_back({g.vertex(i, j), g.vertex(i + 1, j), {}});
  }
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j + 1 < q; ++j) arcs.push_back({g.vertex(i, j), g.vertex(i, j + 1), {}});
  }
  return Digraph(g.vertex_count(), std::move(arcs));
}

Digraph make_complete_symmetric(int n, bool simplified, VertexId s, VertexId t) {
  if (n < 2) throw std::invalid_argument("complete digraph needs n >= 2");
  if (s.index < 0 || s.index >= n || t.index < 0 || t.index >= n) {
    throw std::invalid_argument("s or t out of range");
  }
  if (s == t) throw std::invalid_argument("s and t must differ");
  std::vector<Arc> arcs;
  if (!simplified) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v) arcs.push_back({{u}, {v}, {}});
      }
    }
    return Digraph(n, std::move(arcs));
  }
  const auto inner = [&](int v) { return v != s.index && v != t.index; };
  for (int v = 0; v < n; ++v) {
    if (inner(v)) arcs.push_back({s, {v}, {}});
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && inner(u) && inner(v)) arcs.push_back({{u}, {v}, {}});
    }
  }
  for (int u = 0; u < n; ++u) {
    if (inner(u)) arcs.push_back({{u}, t, {}});
  }
  return Digraph(n, std::move(arcs));
}

Digraph make_directed_cycle(int n) {
  if (n < 2) throw std::invalid_argument("cycle needs n >= 2");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({{i}, {(i + 1) % n}, {}});
  return Digraph(n, std::move(arcs));
}

Digraph make_hypercube(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("hypercube needs 1 <= n <= 20");
  const int count = 1 << n;
  std::vector<Arc> arcs;
  for (int u = 0; u < count; ++u) {
    for (int b = 0; b < n; ++b) {
      if ((u & (1 << b)) == 0) arcs.push_back({{u}, {u | (1 << b)}, {}});
    }
  }
  return Digraph(count, std::move(arcs));
}

Digraph make_tournament(int n, std::uint64_t orientation_bits) {
  if (n < 2) throw std::invalid_argument("tournament needs n >= 2");
  if (n * (n - 1) / 2 > 64) {
    throw std::invalid_argument("tournament orientation only fits 64 pairs (n <= 11)");
  }
  std::vector<Arc> arcs;
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if ((orientation_bits >> k) & 1U) {
        arcs.push_back({{j}, {i}, {}});
      } else {
        arcs.push_back({{i}, {j}, {}});
      }
    }
  }
  return Digraph(n, std::move(arcs));
}

std::optional<GridShape> recognize_grid(const Digraph& g) {
  const int n = g.vertex_count();
  for (int p = 2; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    const int q = n / p;
    if (q < 2) continue;
    const GridShape shape{p, q};
    if (shape.arc_count() != g.arc_count()) continue;
    if (g.same_structure(make_grid(p, q))) return shape;
  }
  return std::nullopt;
}

bool is_directed_cycle(const Digraph& g) {
  const int n = g.vertex_count();
  if (n < 2 || g.arc_count() != n) return false;
  for (int v = 0; v < n; ++v) {
    if (g.out_arcs({v}).size() != 1 || g.in_arcs({v}).size() != 1) return false;
  }
  VertexId v{0};
  for (int step = 0; step < n; ++step) {
    v = g.arc(g.out_arcs(v).front()).tail;
    if (v.index == 0 && step + 1 < n) return false;
  }
  return v.index == 0;
}

bool is_simplified_complete(const Digraph& g, VertexId s, VertexId t) {
  const int n = g.vertex_count();
  if (n < 2 || !g.valid(s) || !g.valid(t) || s == t) return false;
  std::set<std::pair<int, int>> expected;
  const Digraph reference = make_complete_symmetric(n, true, s, t);
  for (const Arc& a : reference.arcs()) {
    expected.insert({a.head.index, a.tail.index});
  }
  std::set<std::pair<int, int>> actual;
  for (const Arc& a : g.arcs()) {
    if (!actual.insert({a.head.index, a.tail.index}).second) return false;
  }
  return actual == expected;
}

bool is_tournament(const Digraph& g) {
  const int n = g.vertex_count();
  if (n < 2 || g.arc_count() != n * (n - 1) / 2) return false;
  std::set<std::pair<int, int>> pairs;
  for (const Arc& a : g.arcs()) {
    const auto key = std::minmax(a.head.index, a.tail.index);
    if (!pairs.insert(key).second) return false;
  }
  return true;
}

PathEnumeration enumerate_st_paths(const Digraph& g, VertexId s, VertexId t,
                                   std::size_t limit) {
  if (!g.valid(s) || !g.valid(t)) throw std::invalid_argument("s or t out of range");
  if (s == t) throw std::invalid_argument("s and t must differ");
  PathEnumeration result;
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<ArcId> arcs;
  bool stop = false;

  std::function<void(VertexId)> visit = [&](VertexId v) {
    for (ArcId e : g.out_arcs(v)) {
      if (stop) return;
      const VertexId w = g.arc(e).tail;
      if (on_path[w.index]) continue;
      arcs.push_back(e);
      if (w == t) {
        if (result.paths.size() == limit) {
          result.overflow = true;
          stop = true;
        } else {
          result.paths.push_back(Path::from_arcs(g, arcs));
        }
      } else {
        on_path[w.index] = true;
        visit(w);
        on_path[w.index] = false;
      }
      arcs.pop_back();
    }
  };
  on_path[s.index] = true;
  visit(s);
  return result;
}

std::optional<std::vector<VertexId>> topological_order(const Digraph& g) {
  const int n = g.vertex_count();
  std::vector<int> indegree(n);
  for (int v = 0; v < n; ++v) indegree[v] = static_cast<int>(g.in_arcs({v}).size());
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<VertexId> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back({v});
    for (ArcId e : g.out_arcs({v})) {
      if (--indegree[g.arc(e).tail.index] == 0) ready.push(g.arc(e).tail.index);
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

bool is_acyclic(const Digraph& g) { return topological_order(g).has_value(); }

std::vector<bool> reachable_from(const Digraph& g, VertexId s) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{s};
  seen[s.index] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (ArcId e : g.out_arcs(v)) {
      const VertexId w = g.arc(e).tail;
      if (!seen[w.index]) {
        seen[w.index] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<bool> reaching(const Digraph& g, VertexId t) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{t};
  seen[t.index] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (ArcId e : g.in_arcs(v)) {
      const VertexId w = g.arc(e).head;
      if (!seen[w.index]) {
        seen[w.index] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

BigInt count_grid_paths(int p, int q) {
  if (p < 2 || q < 2) throw std::invalid_argument("grid needs p, q >= 2");
  return binomial(p + q - 2, p - 1);
}

}  // namespace qspp
