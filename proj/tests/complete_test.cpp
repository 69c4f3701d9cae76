#include "qspp/complete.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qspp/errors.hpp"
#include "qspp/random.hpp"

namespace qspp {
namespace {

QsppInstance random_knstar(Rng& rng, int n, int lo, int hi, bool with_linear) {
  QsppInstance inst(make_complete_symmetric(n, true, {0}, {n - 1}), {0}, {n - 1});
  inst.q = random_interaction(rng, inst.arc_count(), lo, hi);
  if (with_linear) inst.c = random_costs(rng, inst.arc_count(), lo, hi);
  return inst;
}

TEST(NormalizeTest, DropsIncompatiblePairsOnly) {
  QsppInstance inst(make_complete_symmetric(4, true, {0}, {3}), {0}, {3});
  // (s,1) and (2,1) share an end vertex; (s,1) and (1,2) can share a path.
  set_interaction(inst.q, {0}, {3}, Rational(5));
  set_interaction(inst.q, {0}, {2}, Rational(7));
  // 2-cycle (1,2), (2,1).
  set_interaction(inst.q, {2}, {3}, Rational(4));
  const QsppInstance out = normalize_knstar(inst);
  EXPECT_EQ(out.q(0, 3), 0);
  EXPECT_EQ(out.q(3, 0), 0);
  EXPECT_EQ(out.q(2, 3), 0);
  EXPECT_EQ(out.q(0, 2), 7);
}

TEST(NormalizeTest, PreservesPathCosts) {
  Rng rng(51);
  for (int n = 4; n <= 6; ++n) {
    const QsppInstance inst = random_knstar(rng, n, 0, 9, true);
    const QsppInstance out = normalize_knstar(inst);
    for (const auto& p : oracle::all_paths(inst.graph, inst.s, inst.t)) {
      EXPECT_EQ(oracle::cost(out, p), oracle::cost(inst, p));
    }
  }
  EXPECT_THROW(normalize_knstar(QsppInstance(make_grid(2, 2), {0}, {3})), PreconditionError);
}

TEST(PathClassCostsTest, K5Example) {
  const PathClassCosts pc = path_class_costs(make_k5_example());
  EXPECT_EQ(pc.cp.at(2), 0);
  EXPECT_EQ(pc.cp.at(3), 2);
  EXPECT_EQ(pc.cp.at(4), 2);
}

TEST(PathClassCostsTest, K4Example) {
  const PathClassCosts pc = path_class_costs(make_k4_example());
  EXPECT_EQ(pc.cp.at(2), 4);
  EXPECT_EQ(pc.cp.at(3), 0);
}

TEST(PathClassCostsTest, MatchesEnumeration) {
  Rng rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + trial % 3;
    const QsppInstance inst = random_knstar(rng, n, 0, 9, trial % 2 == 0);
    const auto expected = oracle::cost_by_length(inst);
    const PathClassCosts pc = path_class_costs(inst);
    ASSERT_EQ(pc.cp.size(), expected.size());
    for (const auto& [k, total] : expected) EXPECT_EQ(pc.cp.at(k), total) << n << " " << k;
  }
}

TEST(PathClassCostsTest, DiagonalCountsAsLinear) {
  Rng rng(53);
  QsppInstance inst = random_knstar(rng, 6, 0, 9, false);
  for (int e = 0; e < inst.arc_count(); ++e) inst.q(e, e) = random_integer(rng, 0, 9);
  const auto expected = oracle::cost_by_length(inst);
  for (const auto& [k, total] : path_class_costs(inst).cp) EXPECT_EQ(total, expected.at(k));
}

TEST(PathClassCostsTest, ClassSumsCoverQ) {
  Rng rng(54);
  const QsppInstance inst = normalize_knstar(random_knstar(rng, 6, 0, 9, false));
  const PathClassSums sums = path_class_costs(inst).sums;
  Rational total = 0;
  for (const Rational& s : sums.s) total += s;
  EXPECT_EQ(total, inst.q.sum());
}

TEST(PathClassCostsTest, ZeroInstance) {
  for (const auto& [k, cp] : path_class_costs(QsppInstance(
           make_complete_symmetric(6, true, {0}, {5}), {0}, {5})).cp) {
    EXPECT_EQ(cp, 0) << k;
  }
}

TEST(ConditionsTest, K4ExampleViolated) {
  const ConditionReport r = check_necessary_conditions(make_k4_example());
  EXPECT_TRUE(r.any_violated());
  ASSERT_FALSE(r.checks.empty());
  EXPECT_EQ(r.checks[0].kind, 'a');
  EXPECT_EQ(r.checks[0].k, 2);
  EXPECT_FALSE(r.checks[0].holds);
}

TEST(ConditionsTest, K5ExampleSeparatesConditionsFromLinearizability) {
  const QsppInstance inst = make_k5_example();
  const ConditionReport r = check_necessary_conditions(inst);
  EXPECT_FALSE(r.any_violated());
  EXPECT_TRUE(std::any_of(r.checks.begin(), r.checks.end(), [](auto& c) { return c.kind == 'a'; }));
  EXPECT_TRUE(std::any_of(r.checks.begin(), r.checks.end(), [](auto& c) { return c.kind == 'b'; }));
  const PathMatrix pm = build_path_matrix(inst);
  const LinearizationResult lp = lp_oracle(pm, true);
  ASSERT_FALSE(lp.linearizable());
  EXPECT_TRUE(verify_certificate(pm, std::get<FarkasCertificate>(*lp.witness)));
}

TEST(ConditionsTest, ViolationImpliesNonlinearizable) {
  Rng rng(55);
  int violated = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 5 + trial % 2;
    QsppInstance inst = random_knstar(rng, n, 0, 9, false);
    inst.q = random_interaction(rng, inst.arc_count(), 0, 9, 0.15);
    const ConditionReport r = check_necessary_conditions(inst);
    if (!r.any_violated()) continue;
    ++violated;
    EXPECT_FALSE(lp_oracle(build_path_matrix(inst), true).linearizable());
  }
  EXPECT_GT(violated, 0);
}

TEST(ConditionsTest, ScalingInvariance) {
  Rng rng(56);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + trial % 2;
    QsppInstance inst = random_knstar(rng, n, 0, 9, false);
    inst.q = random_interaction(rng, inst.arc_count(), 0, 9, 0.2);
    QsppInstance scaled = inst;
    const Rational alpha = Rational(3) / 7;
    scaled.q *= alpha;
    const ConditionReport a = check_necessary_conditions(inst);
    const ConditionReport b = check_necessary_conditions(scaled);
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) EXPECT_EQ(a.checks[i].holds, b.checks[i].holds);
    for (const auto& [k, cp] : a.cp) EXPECT_EQ(b.cp.at(k), alpha * cp);
    EXPECT_EQ(lp_oracle(build_path_matrix(inst), true).linearizable(),
              lp_oracle(build_path_matrix(scaled), true).linearizable());
  }
}

TEST(K4Test, ExampleRejectedWithKnownCertificate) {
  const LinearizationResult r = k4_linearize(make_k4_example());
  ASSERT_FALSE(r.linearizable());
  const auto& cert = std::get<FarkasCertificate>(*r.witness);
  EXPECT_EQ(cert.b_dot_y, -4);
  EXPECT_EQ(cert.y, (Vector(4) << -1, -1, 1, 1).finished());
}

TEST(K4Test, SingleInteractionUsesFirstCase) {
  QsppInstance inst(make_complete_symmetric(4, true, {0}, {3}), {0}, {3});
  set_interaction(inst.q, {0}, {2}, Rational(1));
  const LinearizationResult r = k4_linearize(inst);
  ASSERT_TRUE(r.linearizable());
  CostVector expected = CostVector::Zero(6);
  expected(2) = 2;
  EXPECT_EQ(*r.vector, expected);
}

TEST(K4Test, AgreesWithOracle) {
  Rng rng(57);
  int accepted = 0;
  for (int trial = 0; trial < 500; ++trial) {
    QsppInstance inst(make_complete_symmetric(4, true, {0}, {3}), {0}, {3});
    inst.q = random_interaction(rng, 6, 0, 9, 0.4);
    if (trial % 3 == 0) inst.c = random_costs(rng, 6, 0, 5);
    const LinearizationResult mine = k4_linearize(inst);
    const PathMatrix pm = build_path_matrix(inst);
    EXPECT_EQ(mine.linearizable(), lp_oracle(pm, true).linearizable()) << "trial " << trial;
    if (mine.linearizable()) {
      ++accepted;
      EXPECT_TRUE((mine.vector->array() >= Rational(0)).all());
      EXPECT_TRUE(oracle::linearizes(inst, *mine.vector));
    } else {
      EXPECT_TRUE(verify_certificate(pm, std::get<FarkasCertificate>(*mine.witness)));
    }
  }
  EXPECT_GT(accepted, 50);
  EXPECT_LT(accepted, 500);
}

TEST(K4Test, NegativePathCostRejected) {
  QsppInstance inst(make_complete_symmetric(4, true, {0}, {3}), {0}, {3});
  inst.c(0) = -1;
  const LinearizationResult r = k4_linearize(inst);
  EXPECT_FALSE(r.linearizable());
  EXPECT_FALSE(lp_oracle(build_path_matrix(inst), true).linearizable());
}

TEST(K4Test, Preconditions) {
  EXPECT_THROW(k4_linearize(make_k5_example()), PreconditionError);
  EXPECT_THROW(k4_linearize(QsppInstance(make_grid(2, 2), {0}, {3})), PreconditionError);
}

TEST(Tournament4Test, AlwaysLinearizable) {
  Rng rng(58);
  for (int trial = 0; trial < 100; ++trial) {
    QsppInstance inst(make_tournament(4, rng() & 63), {0}, {3});
    inst.q = random_interaction(rng, 6, 0, 9, 0.6);
    inst.c = random_costs(rng, 6, 0, 9);
    const LinearizationResult r = tournament4_linearize(inst);
    ASSERT_TRUE(r.linearizable()) << "trial " << trial;
    EXPECT_TRUE((r.vector->array() >= Rational(0)).all());
    EXPECT_TRUE(oracle::linearizes(inst, *r.vector));
  }
}

TEST(Tournament4Test, ZeroInteractionKeepsLinearCosts) {
  QsppInstance inst(make_tournament(4, 0), {0}, {3});
  inst.c = CostVector::Constant(6, Rational(2));
  EXPECT_EQ(*tournament4_linearize(inst).vector, inst.c);
  EXPECT_THROW(tournament4_linearize(make_k5_example()), PreconditionError);
}

}  // namespace
}  // namespace qspp
