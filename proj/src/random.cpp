#include "qspp/random.hpp"

#include <stdexcept>

namespace qspp {

Rational random_integer(Rng& rng, int lo, int hi) {
  return Rational(std::uniform_int_distribution<int>(lo, hi)(rng));
}

CostVector random_costs(Rng& rng, int m, int lo, int hi) {
  CostVector c(m);
  for (int e = 0; e < m; ++e) c(e) = random_integer(rng, lo, hi);
  return c;
}

InteractionMatrix random_interaction(Rng& rng, int m, int lo, int hi, double density) {
  std::bernoulli_distribution keep(density);
  InteractionMatrix q = InteractionMatrix::Zero(m, m);
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      if (keep(rng)) set_interaction(q, {e}, {f}, random_integer(rng, lo, hi));
    }
  }
  return q;
}

std::pair<InteractionMatrix, Vector> random_weak_sum(Rng& rng, int m, int lo, int hi) {
  Vector a = random_costs(rng, m, lo, hi);
  InteractionMatrix q(m, m);
  for (int e = 0; e < m; ++e) {
    for (int f = 0; f < m; ++f) q(e, f) = e == f ? Rational(0) : Rational(a(e) + a(f));
  }
  return {std::move(q), std::move(a)};
}

std::pair<InteractionMatrix, CostVector> random_product(Rng& rng, int m, int lo, int hi) {
  if (lo < 0) throw std::invalid_argument("product generator needs nonnegative entries");
  const Vector a = random_costs(rng, m, lo, hi);
  InteractionMatrix q = a * a.transpose();
  CostVector c = q.diagonal();
  q.diagonal().setZero();
  return {std::move(q), std::move(c)};
}

InteractionMatrix random_adjacent_interaction(Rng& rng, const Digraph& g, int lo, int hi) {
  const int m = g.arc_count();
  InteractionMatrix q = InteractionMatrix::Zero(m, m);
  for (int e = 0; e < m; ++e) {
    const Arc& a = g.arc({e});
    for (ArcId f : g.out_arcs(a.tail)) {
      if (g.arc(f).tail == a.head) continue;
      set_interaction(q, {e}, f, random_integer(rng, lo, hi));
    }
  }
  return q;
}

Digraph random_dag(Rng& rng, int n, double density) {
  if (n < 2) throw std::invalid_argument("random DAG needs at least two vertices");
  std::bernoulli_distribution keep(density);
  for (;;) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (keep(rng)) arcs.push_back({{i}, {j}, {}});
      }
    }
    Digraph g(n, std::move(arcs));
    if (reachable_from(g, {0})[n - 1]) return g;
  }
}

CostVector random_potential_kernel(Rng& rng, const Digraph& g, VertexId s, VertexId t, int lo,
                                   int hi) {
  std::vector<Rational> pi(g.vertex_count());
  for (Rational& v : pi) v = random_integer(rng, lo, hi);
  pi[s.index] = 0;
  pi[t.index] = 0;
  CostVector z(g.arc_count());
  for (int e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arc({e});
    z(e) = pi[a.head.index] - pi[a.tail.index];
  }
  return z;
}

QapInstance random_qap(Rng& rng, int n, int lo, int hi) {
  const auto symmetric = [&] {
    Matrix mat = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      for (int k = i + 1; k < n; ++k) mat(i, k) = mat(k, i) = random_integer(rng, lo, hi);
    }
    return mat;
  };
  Matrix a = symmetric();
  Matrix b = symmetric();
  Matrix c(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) c(i, j) = random_integer(rng, lo, hi);
  }
  return QapInstance(std::move(a), std::move(b), std::move(c));
}

}  // namespace qspp
