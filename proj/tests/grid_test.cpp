#include "qspp/grid.hpp"

#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qspp/errors.hpp"
#include "qspp/random.hpp"
#include "qspp/special_cases.hpp"

namespace qspp {
namespace {

QsppInstance grid_instance(int p, int q) {
  const GridShape g{p, q};
  return QsppInstance(make_grid(p, q), g.source(), g.sink());
}

bool inside(const GridShape& g, SubGrid sub, ArcId e) {
  for (int i = 0; i < sub.rows; ++i) {
    for (int j = 0; j < sub.cols; ++j) {
      if (i + 1 < sub.rows && g.down(i, j) == e) return true;
      if (j + 1 < sub.cols && g.right(i, j) == e) return true;
    }
  }
  return false;
}

TEST(ReduceTest, UnitTwoByTwo) {
  const GridShape g{2, 2};
  const QsppInstance inst(make_grid(2, 2), g.source(), g.sink(), CostVector::Ones(4),
                          InteractionMatrix::Zero(4, 4));
  const CostVector r = reduce_cost_vector(inst);
  CostVector expected = CostVector::Zero(4);
  expected(g.right(0, 0).index) = 2;
  expected(g.down(0, 0).index) = 2;
  EXPECT_EQ(r, expected);
  EXPECT_TRUE(reduce_cost_vector(grid_instance(3, 4)).isZero());
}

TEST(ReduceTest, SupportSize) {
  for (int p = 2; p <= 5; ++p) {
    for (int q = 2; q <= 5; ++q) {
      EXPECT_EQ(static_cast<int>(reduced_support(GridShape{p, q}, {p, q}).size()),
                (p - 1) * (q - 1) + 1);
    }
  }
}

TEST(ReduceTest, KernelInvarianceAndTieOrder) {
  Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int p = 2 + trial % 4;
    const int q = 2 + (trial / 4) % 4;
    const GridShape g{p, q};
    const Digraph d = make_grid(p, q);
    const CostVector c = random_costs(rng, d.arc_count(), -9, 9);
    const CostVector z = random_potential_kernel(rng, d, g.source(), g.sink(), -9, 9);
    const SubGrid full{p, q};
    const CostVector r = reduce_cost_vector(g, c, full);
    EXPECT_EQ(r, reduce_cost_vector(g, CostVector(c + z), full));
    EXPECT_EQ(r, reduce_cost_vector(g, c, full, TieOrder::kDecreasingColumn));

    const auto support = reduced_support(g, full);
    const std::set<ArcId> j(support.begin(), support.end());
    for (int e = 0; e < d.arc_count(); ++e) {
      if (!j.count({e})) EXPECT_EQ(r(e), 0);
    }
    for (const Path& path : enumerate_st_paths(d, g.source(), g.sink()).paths) {
      EXPECT_EQ(oracle::linear(r, path.arcs()), oracle::linear(c, path.arcs()));
    }
  }
}

TEST(ReduceTest, SubGridIgnoresOutsideArcs) {
  Rng rng(62);
  const GridShape g{4, 5};
  const SubGrid sub{3, 3};
  const CostVector c = random_costs(rng, g.arc_count(), -5, 5);
  CostVector noisy = c;
  for (int e = 0; e < g.arc_count(); ++e) {
    if (!inside(g, sub, {e})) noisy(e) += 100;
  }
  const CostVector r = reduce_cost_vector(g, c, sub);
  EXPECT_EQ(r, reduce_cost_vector(g, noisy, sub));
  for (int e = 0; e < g.arc_count(); ++e) {
    if (!inside(g, sub, {e})) EXPECT_EQ(r(e), 0);
  }
}

TEST(CriticalPathTest, CountsAndMembership) {
  for (int p = 2; p <= 6; ++p) {
    for (int q = 2; q <= 6; ++q) {
      const auto paths = critical_paths(p, q);
      EXPECT_EQ(static_cast<int>(paths.size()), (p - 1) * (q - 1) + 1);
      std::set<std::vector<ArcId>> distinct;
      for (const auto& [e, path] : paths) {
        EXPECT_TRUE(path.contains(e));
        EXPECT_EQ(path.source(), GridShape(p, q).source());
        EXPECT_EQ(path.target(), GridShape(p, q).sink());
        distinct.insert(path.arcs());
      }
      EXPECT_EQ(distinct.size(), paths.size());
    }
  }
  EXPECT_EQ(critical_paths(2, 2).size(), 2u);
  EXPECT_EQ(critical_paths(3, 3).size(), 5u);
}

TEST(CriticalPathTest, IncrementalCostsMatchDirect) {
  Rng rng(63);
  for (int p = 2; p <= 6; ++p) {
    for (int q = 2; q <= 6; ++q) {
      const GridShape g{p, q};
      const int m = g.arc_count();
      const CostVector c = random_costs(rng, m, -9, 9);
      InteractionMatrix qm = random_interaction(rng, m, -9, 9);
      for (int e = 0; e < m; ++e) qm(e, e) = random_integer(rng, -9, 9);
      const QsppInstance inst(make_grid(p, q), g.source(), g.sink(), c, qm);
      for (int rows = 2; rows <= p; ++rows) {
        for (int cols = 2; cols <= q; ++cols) {
          const SubGrid sub{rows, cols};
          for (const auto& [e, cost] : critical_path_costs(g, c, qm, sub)) {
            EXPECT_EQ(cost, oracle::cost(inst, critical_path(g, sub, e)));
          }
        }
      }
    }
  }
}

TEST(PseudoTest, ZeroAndWeakSum) {
  EXPECT_TRUE(pseudo_linearize(grid_instance(4, 3)).isZero());
  Rng rng(64);
  QsppInstance inst = grid_instance(3, 3);
  inst.q = random_weak_sum(rng, inst.arc_count(), 0, 9).first;
  EXPECT_TRUE(oracle::linearizes(inst, pseudo_linearize(inst)));
}

TEST(PseudoTest, ReproducesCriticalPaths) {
  Rng rng(65);
  for (int trial = 0; trial < 20; ++trial) {
    const int p = 2 + trial % 4;
    const int q = 2 + trial / 5;
    QsppInstance inst = grid_instance(p, q);
    inst.q = random_interaction(rng, inst.arc_count(), -5, 9);
    inst.c = random_costs(rng, inst.arc_count(), -5, 9);
    const CostVector pc = pseudo_linearize(inst);
    for (const auto& [e, path] : critical_paths(p, q)) {
      EXPECT_EQ(oracle::linear(pc, path.arcs()), oracle::cost(inst, path.arcs()));
    }
  }
}

TEST(ShrinkTest, SingleEntry) {
  const GridShape g{2, 2};
  QsppInstance inst = grid_instance(2, 2);
  const VertexId v = g.vertex(1, 0);
  const ArcId vt = g.right(1, 0);
  const ArcId e = g.right(0, 0);
  set_interaction(inst.q, vt, e, Rational(3));
  CostVector lin = CostVector::Zero(4);
  lin(e.index) = 10;
  lin(vt.index) = 4;
  EXPECT_EQ(shrink_target(lin, inst, v)(e.index), 8);
  EXPECT_TRUE(shrink_target(CostVector::Zero(4), grid_instance(2, 2), v).isZero());
  EXPECT_THROW(shrink_target(lin, inst, g.vertex(0, 0)), PreconditionError);
}

TEST(ShrinkTest, MovesLinearizationToNewTarget) {
  Rng rng(66);
  for (int trial = 0; trial < 10; ++trial) {
    const GridShape g{3, 3};
    QsppInstance inst = grid_instance(3, 3);
    inst.q = random_weak_sum(rng, inst.arc_count(), 0, 9).first;
    const CostVector lin = linearize_weak_sum(inst);
    for (const VertexId v : {g.vertex(2, 1), g.vertex(1, 2)}) {
      const CostVector cv = shrink_target(lin, inst, v);
      QsppInstance smaller(inst.graph, inst.s, v, inst.c, inst.q);
      EXPECT_TRUE(oracle::linearizes(smaller, cv));
    }
  }
}

TEST(G2qTest, SingleInteraction) {
  const GridShape g{2, 3};
  QsppInstance inst = grid_instance(2, 3);
  set_interaction(inst.q, g.down(0, 0), g.right(1, 0), Rational(1));
  CostVector expected = CostVector::Zero(inst.arc_count());
  expected(g.down(0, 0).index) = 2;
  EXPECT_EQ(linearize_g2q(inst), expected);
  EXPECT_TRUE(linearize_g2q(grid_instance(2, 5)).isZero());
  EXPECT_THROW(linearize_g2q(grid_instance(3, 3)), PreconditionError);
}

TEST(G2qTest, RandomInstances) {
  Rng rng(67);
  for (int q = 2; q <= 6; ++q) {
    for (int trial = 0; trial < 5; ++trial) {
      QsppInstance inst = grid_instance(2, q);
      inst.q = random_interaction(rng, inst.arc_count(), -9, 9);
      inst.c = random_costs(rng, inst.arc_count(), -9, 9);
      EXPECT_TRUE(oracle::linearizes(inst, linearize_g2q(inst)));
    }
  }
}

TEST(LinearizeGridTest, ZeroAndWeakSum) {
  const LinearizationResult zero = linearize_grid(grid_instance(4, 4));
  ASSERT_TRUE(zero.linearizable());
  EXPECT_TRUE(zero.vector->isZero());

  Rng rng(68);
  QsppInstance inst = grid_instance(4, 4);
  inst.q = random_weak_sum(rng, inst.arc_count(), 0, 9).first;
  const LinearizationResult r = linearize_grid(inst);
  ASSERT_TRUE(r.linearizable());
  EXPECT_EQ(enumerate_st_paths(inst.graph, inst.s, inst.t).paths.size(), 20u);
  EXPECT_TRUE(oracle::linearizes(inst, *r.vector));
}

// Mixed families so both verdicts show up in quantity.
QsppInstance mixed_instance(Rng& rng, int p, int q, int kind) {
  QsppInstance inst = grid_instance(p, q);
  const int m = inst.arc_count();
  switch (kind % 5) {
    case 0:
      inst.q = random_interaction(rng, m, 0, 9);
      break;
    case 1:
      inst.q = random_weak_sum(rng, m, -5, 9).first;
      break;
    case 2: {
      inst.q = random_weak_sum(rng, m, 0, 9).first;
      const int e = std::uniform_int_distribution<int>(0, m - 2)(rng);
      const int f = std::uniform_int_distribution<int>(e + 1, m - 1)(rng);
      inst.q(e, f) += 1;
      inst.q(f, e) += 1;
      break;
    }
    case 3:
      inst.q = random_interaction(rng, m, 1, 9, 0.08);
      break;
    default: {
      auto [qm, c] = random_product(rng, m, 0, 4);
      inst.q = qm;
      inst.c = c;
    }
  }
  if (kind % 2 == 0) inst.c += random_costs(rng, m, -5, 5);
  return inst;
}

TEST(LinearizeGridTest, VerdictMatchesOracle) {
  Rng rng(69);
  int yes = 0;
  int no = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const int p = 2 + trial % 3;
    const int q = 2 + (trial / 3) % 3;
    const QsppInstance inst = mixed_instance(rng, p, q, trial);
    const LinearizationResult mine = linearize_grid(inst);
    const LinearizationResult lp = lp_oracle(build_path_matrix(inst), false);
    ASSERT_EQ(mine.linearizable(), lp.linearizable()) << "trial " << trial;
    (mine.linearizable() ? yes : no)++;
  }
  EXPECT_GT(yes, 50);
  EXPECT_GT(no, 50);
}

TEST(LinearizeGridTest, SoundnessAndWitnesses) {
  Rng rng(70);
  for (int trial = 0; trial < 80; ++trial) {
    const int p = 2 + trial % 4;
    const int q = 2 + (trial / 4) % 4;
    const QsppInstance inst = mixed_instance(rng, p, q, trial);
    const LinearizationResult r = linearize_grid(inst);
    if (r.linearizable()) {
      EXPECT_TRUE(oracle::linearizes(inst, *r.vector)) << p << "x" << q;
    } else {
      const auto& m = std::get<PathMismatch>(*r.witness);
      EXPECT_EQ(m.expected, oracle::cost(inst, m.path.arcs()));
      EXPECT_NE(m.expected, m.got);
      EXPECT_FALSE(lp_oracle(build_path_matrix(inst), false).linearizable());
    }
  }
}

TEST(LinearizeGridTest, AsymmetricAndDiagonalInput) {
  Rng rng(71);
  QsppInstance inst = grid_instance(3, 4);
  const Vector a = random_costs(rng, inst.arc_count(), 0, 9);
  inst.q = weak_sum_matrix(a);
  // Move half of each symmetric pair to the other side and add a diagonal.
  for (int e = 0; e < inst.arc_count(); ++e) {
    for (int f = e + 1; f < inst.arc_count(); ++f) {
      inst.q(e, f) += inst.q(f, e);
      inst.q(f, e) = 0;
    }
    inst.q(e, e) = random_integer(rng, 0, 9);
  }
  const LinearizationResult r = linearize_grid(inst);
  ASSERT_TRUE(r.linearizable());
  EXPECT_TRUE(oracle::linearizes(inst, *r.vector));
}

TEST(LinearizeGridTest, Preconditions) {
  EXPECT_THROW(linearize_grid(QsppInstance(make_hypercube(3), {0}, {7})), PreconditionError);
  EXPECT_THROW(linearize_grid(QsppInstance(make_grid(3, 3), {1}, {8})), PreconditionError);
}

}  // namespace
}  // namespace qspp
