#include "qspp/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "qspp/errors.hpp"

namespace qspp {

QapInstance::QapInstance(int n_)
    : n(n_), a(Matrix::Zero(n_, n_)), b(Matrix::Zero(n_, n_)), c(Matrix::Zero(n_, n_)) {}

QapInstance::QapInstance(Matrix a_, Matrix b_, Matrix c_)
    : n(static_cast<int>(a_.rows())), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a.cols() != n || b.rows() != n || b.cols() != n || c.rows() != n || c.cols() != n) {
    throw std::invalid_argument("QAP matrices must all be n x n");
  }
  if (a != a.transpose() || b != b.transpose()) {
    throw std::invalid_argument("QAP flow and distance matrices must be symmetric");
  }
}

std::pair<Rational, std::vector<int>> solve_qap_brute_force(const QapInstance& qap) {
  std::vector<int> perm(qap.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Rational> best;
  std::vector<int> best_perm = perm;
  do {
    Rational cost = 0;
    for (int i = 0; i < qap.n; ++i) {
      cost += qap.c(i, perm[i]);
      for (int k = 0; k < qap.n; ++k) cost += qap.a(i, k) * qap.b(perm[i], perm[k]);
    }
    if (!best || cost < *best) {
      best = cost;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best.value_or(Rational(0)), best_perm};
}

QsppInstance qap_to_qspp(const QapInstance& qap) {
  const int n = qap.n;
  if (n < 1) throw std::invalid_argument("QAP order must be positive");
  Matrix a = qap.a;
  Matrix b = qap.b;
  Matrix lin = qap.c;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) lin(i, j) += a(i, i) * b(j, j);
  }
  a.diagonal().setZero();
  b.diagonal().setZero();

  Rational big_m = 1;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) big_m += abs(a(i, k) * b(j, l));
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) big_m += abs(lin(i, j));
  }

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      arcs.push_back({{j}, {j + 1}, "layer " + std::to_string(j) + " facility " +
                                        std::to_string(i)});
    }
  }
  QsppInstance inst(Digraph(n + 1, std::move(arcs)), {0}, {n});
  const auto id = [n](int layer, int facility) { return layer * n + facility; };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      inst.c(id(j, i)) = lin(i, j);
      for (int l = 0; l < n; ++l) {
        if (l == j) continue;
        for (int k = 0; k < n; ++k) {
          inst.q(id(j, i), id(l, k)) = i == k ? big_m : Rational(a(i, k) * b(j, l));
        }
      }
    }
  }
  return inst;
}

std::optional<std::vector<int>> decode_assignment(const QapInstance& qap, const Path& path) {
  const int n = qap.n;
  if (path.length() != n) return std::nullopt;
  std::vector<int> location(n, -1);
  for (ArcId e : path.arcs()) {
    const int layer = e.index / n;
    const int facility = e.index % n;
    if (location[facility] != -1) return std::nullopt;
    location[facility] = layer;
  }
  return location;
}

QaplibParse parse_qaplib(std::string_view text) {
  std::vector<std::string> tokens;
  {
    std::istringstream in{std::string(text)};
    for (std::string tok; in >> tok;) tokens.push_back(tok);
  }
  if (tokens.empty()) throw ParseError("empty QAPLIB input", 0);

  const auto parse_int = [&](std::size_t pos) {
    const std::string& tok = tokens[pos];
    const std::size_t start = (!tok.empty() && tok[0] == '-') ? 1 : 0;
    if (start == tok.size() ||
        !std::all_of(tok.begin() + static_cast<std::ptrdiff_t>(start), tok.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw ParseError("expected an integer, got '" + tok + "'", pos);
    }
    return BigInt(tok);
  };

  const BigInt order = parse_int(0);
  if (order < 1 || order > 1000) throw ParseError("matrix order out of range", 0);
  const int n = order.convert_to<int>();
  const std::size_t block = static_cast<std::size_t>(n) * n;
  const std::size_t count = tokens.size() - 1;
  if (count != 2 * block && count != 3 * block) {
    throw ParseError("expected " + std::to_string(2 * block) + " or " +
                         std::to_string(3 * block) + " matrix entries after n = " +
                         std::to_string(n) + ", found " + std::to_string(count),
                     std::min(tokens.size(), 1 + 2 * block));
  }

  const auto read_matrix = [&](std::size_t first) {
    Matrix mat(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const std::size_t pos = first + static_cast<std::size_t>(i) * n + j;
        mat(i, j) = Rational(parse_int(pos));
      }
    }
    return mat;
  };

  QaplibParse result;
  Matrix a = read_matrix(1);
  Matrix b = read_matrix(1 + block);
  Matrix c = count == 3 * block ? read_matrix(1 + 2 * block) : Matrix(Matrix::Zero(n, n));
  for (Matrix* mat : {&a, &b}) {
    if (*mat != mat->transpose()) {
      result.symmetrized = true;
      *mat = ((*mat + mat->transpose()) / Rational(2)).eval();
    }
  }
  result.instance = QapInstance(std::move(a), std::move(b), std::move(c));
  return result;
}

QsppInstance disjoint_to_aqspp(const DisjointPathsInstance& dp) {
  const Digraph& g = dp.graph;
  for (VertexId v : {dp.s, dp.t, dp.s2, dp.t2}) {
    if (!g.valid(v)) throw std::invalid_argument("terminal vertex out of range");
  }
  if (dp.s == dp.s2 || dp.t == dp.t2) {
    throw std::invalid_argument("the two pairs need distinct sources and distinct targets");
  }
  const int n = g.vertex_count();
  const int m = g.arc_count();
  const auto copy = [n](VertexId v, int layer) { return VertexId{v.index + layer * n}; };

  std::vector<Arc> arcs;
  arcs.reserve(4 * static_cast<std::size_t>(m) + 1);
  for (int e = 0; e < m; ++e) {
    const Arc& a = g.arc({e});
    const VertexId mid{2 * n + e};
    arcs.push_back({copy(a.head, 0), mid, {}});
    arcs.push_back({mid, copy(a.tail, 0), {}});
    arcs.push_back({copy(a.head, 1), mid, {}});
    arcs.push_back({mid, copy(a.tail, 1), {}});
  }
  arcs.push_back({copy(dp.t, 0), copy(dp.s2, 1), "bridge"});

  QsppInstance inst(Digraph(2 * n + m, std::move(arcs)), copy(dp.s, 0), copy(dp.t2, 1));
  for (int e = 0; e < m; ++e) {
    const int in1 = 4 * e;
    const int out1 = 4 * e + 1;
    const int in2 = 4 * e + 2;
    const int out2 = 4 * e + 3;
    set_interaction(inst.q, {in1}, {out2}, Rational(1));
    set_interaction(inst.q, {in2}, {out1}, Rational(1));
  }
  return inst;
}

bool has_two_arc_disjoint_paths(const DisjointPathsInstance& dp, std::size_t limit) {
  const auto paths_between = [&](VertexId from, VertexId to) {
    if (from == to) return std::vector<std::vector<ArcId>>{{}};
    auto found = enumerate_st_paths(dp.graph, from, to, limit);
    if (found.overflow) throw LimitExceeded("too many paths for the disjointness search");
    std::vector<std::vector<ArcId>> out;
    for (const Path& p : found.paths) out.push_back(p.arcs());
    return out;
  };
  const auto first = paths_between(dp.s, dp.t);
  const auto second = paths_between(dp.s2, dp.t2);
  for (const auto& p1 : first) {
    std::vector<bool> used(dp.graph.arc_count(), false);
    for (ArcId e : p1) used[e.index] = true;
    for (const auto& p2 : second) {
      if (std::none_of(p2.begin(), p2.end(), [&](ArcId e) { return used[e.index]; })) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace qspp
