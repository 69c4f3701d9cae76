#include "qspp/io.hpp"

#include <gtest/gtest.h>

#include "qspp/aqspp.hpp"
#include "qspp/complete.hpp"
#include "qspp/errors.hpp"
#include "qspp/random.hpp"

namespace qspp {
namespace {

void expect_round_trip(const QsppInstance& inst) {
  const std::string text = write_instance(inst);
  const QsppInstance back = read_instance(text);
  EXPECT_TRUE(back.graph.same_structure(inst.graph));
  EXPECT_EQ(back.s, inst.s);
  EXPECT_EQ(back.t, inst.t);
  EXPECT_EQ(back.c, inst.c);
  EXPECT_EQ(back.q, inst.q);
  EXPECT_EQ(write_instance(back), text);
}

TEST(IoTest, RoundTripAcrossFamilies) {
  Rng rng(81);
  std::vector<QsppInstance> all;
  all.emplace_back(make_grid(3, 4), VertexId{0}, VertexId{11});
  all.push_back(make_k4_example());
  all.push_back(make_k5_example());
  all.emplace_back(make_directed_cycle(5), VertexId{0}, VertexId{3});
  all.emplace_back(make_hypercube(3), VertexId{0}, VertexId{7});
  all.emplace_back(make_tournament(5, 0b1011001), VertexId{0}, VertexId{4});
  all.push_back(make_cyclic_counterexample(Rational(1) / 2));
  all.push_back(qap_to_qspp(random_qap(rng, 3, 0, 9)));
  all.push_back(disjoint_to_aqspp({make_complete_symmetric(4, false, {0}, {1}), {0}, {1}, {2}, {3}}));
  for (QsppInstance& inst : all) {
    inst.c += random_costs(rng, inst.arc_count(), -3, 9);
    inst.c(0) += Rational(1) / 3;
    expect_round_trip(inst);
    inst.q += random_interaction(rng, inst.arc_count(), -4, 4, 0.5);
    expect_round_trip(inst);
    inst.q(0, 0) = Rational(-7) / 2;
    expect_round_trip(inst);
    inst.q(0, inst.arc_count() - 1) += 1;
    expect_round_trip(inst);
  }
}

TEST(IoTest, SparseAndDenseChoice) {
  QsppInstance inst = make_k4_example();
  EXPECT_NE(write_instance(inst).find("Q sparse 2"), std::string::npos);
  inst.q(1, 1) = 1;
  EXPECT_NE(write_instance(inst).find("Q dense"), std::string::npos);
}

TEST(IoTest, CommentsAndWhitespace) {
  const std::string text =
      "# two arcs\nQSPP 1\nn 3 m 2\ns 0\nt 2\n"
      "arc 0 0 1\n# middle\narc 1 1 2\n"
      "c  1/2   -3\nQ sparse 1\n0 1 4\n";
  const QsppInstance inst = read_instance(text);
  EXPECT_EQ(inst.c(0), Rational(1) / 2);
  EXPECT_EQ(inst.q(1, 0), 4);
  EXPECT_EQ(path_cost(inst, Path::from_arcs(inst.graph, {{0}, {1}})), Rational(1) / 2 - 3 + 8);
}

size_t error_position(const std::string& text) {
  try {
    read_instance(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "accepted: " << text;
  return 0;
}

TEST(IoTest, ErrorsCarryTokenPosition) {
  const std::string head = "QSPP 1 n 2 m 1 s 0 t 1 arc 0 0 1 c ";
  EXPECT_EQ(error_position("QSPX 1"), 0u);
  EXPECT_EQ(error_position("QSPP 2"), 1u);
  EXPECT_EQ(error_position(head + "x Q sparse 0"), 15u);
  EXPECT_EQ(error_position(head + "1 Q sparse 1 0 0 5"), 19u);
  EXPECT_EQ(error_position(head + "1 Q dense 1 extra"), 19u);
  EXPECT_EQ(error_position(head + "1 Q banded"), 17u);
  EXPECT_EQ(error_position("QSPP 1 n 2 m 1 s 0 t 0"), 9u);
  EXPECT_EQ(error_position("QSPP 1 n 2 m 1 s 0 t 1 arc 0 1 1"), 13u);
  EXPECT_THROW(read_instance(head), ParseError);
}

TEST(IoTest, ConflictingSparseEntries) {
  const std::string text =
      "QSPP 1 n 3 m 2 s 0 t 2 arc 0 0 1 arc 1 1 2 c 0 0 Q sparse 2 0 1 3 1 0 4";
  EXPECT_THROW(read_instance(text), ParseError);
}

TEST(IoTest, CostVectorFormat) {
  const CostVector c = (CostVector(3) << 1, Rational(-2) / 3, 0).finished();
  EXPECT_EQ(format_cost_vector(c), "c\n1 -2/3 0\n");
}

}  // namespace
}  // namespace qspp
