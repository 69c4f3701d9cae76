#include "qspp/linearization.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qspp/complete.hpp"
#include "qspp/errors.hpp"
#include "qspp/random.hpp"

namespace qspp {
namespace {

Vector vec(std::initializer_list<int> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (int x : values) v(i++) = x;
  return v;
}

// Whichever way the oracle answers, the answer carries its own proof.
void expect_self_certified(const QsppInstance& inst, bool nonneg) {
  const PathMatrix pm = build_path_matrix(inst);
  const LinearizationResult r = lp_oracle(pm, nonneg);
  if (r.linearizable()) {
    ASSERT_TRUE(r.vector.has_value());
    EXPECT_TRUE(oracle::linearizes(inst, *r.vector));
    if (nonneg) EXPECT_TRUE((r.vector->array() >= Rational(0)).all());
  } else {
    const auto& cert = std::get<FarkasCertificate>(*r.witness);
    EXPECT_EQ(cert.nonnegative, nonneg);
    EXPECT_TRUE(verify_certificate(pm, cert));
    // Recheck the Farkas conditions by hand.
    const Matrix b = pm.rows.cast<Rational>();
    const Vector bty = b.transpose() * cert.y;
    for (Eigen::Index e = 0; e < bty.size(); ++e) {
      if (nonneg) {
        EXPECT_GE(bty(e), 0);
      } else {
        EXPECT_EQ(bty(e), 0);
      }
    }
    EXPECT_LT(pm.b.dot(cert.y), 0);
  }
}

TEST(PathMatrixTest, K4Example) {
  const PathMatrix pm = build_path_matrix(make_k4_example());
  Eigen::MatrixXi expected(4, 6);
  expected << 1, 0, 0, 0, 1, 0,  //
      0, 1, 0, 0, 0, 1,          //
      1, 0, 1, 0, 0, 1,          //
      0, 1, 0, 1, 1, 0;
  EXPECT_EQ(pm.rows, expected);
  EXPECT_EQ(pm.b, vec({2, 2, 0, 0}));
  EXPECT_EQ(pm.path_count(), 4);
  EXPECT_EQ(pm.arc_count(), 6);
}

TEST(PathMatrixTest, SmallGrid) {
  const PathMatrix pm = build_path_matrix(QsppInstance(make_grid(2, 2), {0}, {3}));
  EXPECT_EQ(pm.rows.rows(), 2);
  EXPECT_EQ(pm.rows.rowwise().sum(), Eigen::Vector2i(2, 2));
  EXPECT_EQ(pm.rows.colwise().sum(), Eigen::RowVector4i(1, 1, 1, 1));
  EXPECT_THROW(build_path_matrix(QsppInstance(make_grid(4, 4), {0}, {15}), 3), LimitExceeded);
}

TEST(LpOracleTest, K4ExampleNonnegativeIsInfeasible) {
  const PathMatrix pm = build_path_matrix(make_k4_example());
  const LinearizationResult r = lp_oracle(pm, true);
  ASSERT_FALSE(r.linearizable());
  const auto& cert = std::get<FarkasCertificate>(*r.witness);
  EXPECT_TRUE(verify_certificate(pm, cert));
  EXPECT_LT(cert.b_dot_y, 0);

  FarkasCertificate known;
  known.y = vec({-1, -1, 1, 1});
  known.b_dot_y = -4;
  known.nonnegative = true;
  EXPECT_TRUE(verify_certificate(pm, known));
  EXPECT_EQ(pm.b.dot(known.y), -4);
}

TEST(LpOracleTest, K4ExampleIsLinearizableWithSignedCosts) {
  const QsppInstance inst = make_k4_example();
  const LinearizationResult r = lp_oracle(build_path_matrix(inst), false);
  ASSERT_TRUE(r.linearizable());
  EXPECT_TRUE(oracle::linearizes(inst, *r.vector));
}

TEST(LpOracleTest, ZeroRightHandSide) {
  const LinearizationResult r =
      lp_oracle(build_path_matrix(QsppInstance(make_grid(3, 3), {0}, {8})), true);
  ASSERT_TRUE(r.linearizable());
  EXPECT_TRUE(r.vector->isZero());
}

TEST(LpOracleTest, SingleInteractionOnK4) {
  QsppInstance inst(make_complete_symmetric(4, true, {0}, {3}), {0}, {3});
  // Only P3 = (s,1)(1,2)(2,t) pays.
  set_interaction(inst.q, {0}, {2}, Rational(1));
  const PathMatrix pm = build_path_matrix(inst);
  EXPECT_EQ(pm.b, vec({0, 0, 2, 0}));
  const LinearizationResult r = lp_oracle(pm, true);
  ASSERT_TRUE(r.linearizable());
  EXPECT_TRUE(oracle::linearizes(inst, *r.vector));
}

TEST(LpOracleTest, InvalidCertificateRejected) {
  const PathMatrix pm = build_path_matrix(make_k4_example());
  FarkasCertificate bad;
  bad.y = vec({1, 1, -1, -1});
  bad.nonnegative = true;
  bad.b_dot_y = pm.b.dot(bad.y);
  EXPECT_FALSE(verify_certificate(pm, bad));
  bad.y = vec({-1, -1, 1, 1});
  bad.nonnegative = false;
  EXPECT_FALSE(verify_certificate(pm, bad));
}

TEST(LpOracleTest, SelfCertifiedOnRandomInstances) {
  Rng rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    QsppInstance inst = [&] {
      switch (trial % 4) {
        case 0: return QsppInstance(make_grid(3, 2 + trial % 3), {0}, {3 * (2 + trial % 3) - 1});
        case 1: return QsppInstance(make_complete_symmetric(5, true, {0}, {4}), {0}, {4});
        case 2: return QsppInstance(make_tournament(5, rng() & 1023), {0}, {4});
        default: {
          const int n = 4 + trial % 4;
          return QsppInstance(random_dag(rng, n, 0.5), {0}, {n - 1});
        }
      }
    }();
    inst.q = random_interaction(rng, inst.arc_count(), 0, 6, 0.3);
    inst.c = random_costs(rng, inst.arc_count(), 0, 4);
    expect_self_certified(inst, true);
    expect_self_certified(inst, false);
  }
}

TEST(LpOracleTest, EmptyPathSetIsFeasible) {
  const Digraph g(3, {{{0}, {1}, {}}});
  const LinearizationResult r = lp_oracle(build_path_matrix(QsppInstance(g, {0}, {2})), true);
  EXPECT_TRUE(r.linearizable());
}

TEST(LpOracleTest, SizeLimit) {
  PathMatrix pm;
  pm.rows = Eigen::MatrixXi::Zero(kLpOracleMaxPaths + 1, 1);
  pm.b = Vector::Zero(kLpOracleMaxPaths + 1);
  const Digraph g(2, {{{0}, {1}, {}}});
  pm.paths.assign(kLpOracleMaxPaths + 1, Path::from_arcs(g, {{0}}));
  EXPECT_THROW(lp_oracle(pm, true), PreconditionError);
}

TEST(MismatchTest, FindsFirstDisagreement) {
  const QsppInstance inst = make_k4_example();
  EXPECT_FALSE(reproduces_all_paths(inst, CostVector::Zero(6)));
  const auto m = find_mismatch(inst, CostVector::Zero(6));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->expected, 2);
  EXPECT_EQ(m->got, 0);
  const CostVector signed_vec = lp_oracle(build_path_matrix(inst), false).vector.value();
  EXPECT_FALSE(find_mismatch(inst, signed_vec).has_value());
}

}  // namespace
}  // namespace qspp
