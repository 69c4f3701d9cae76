#pragma once

// Instance generators for the two hardness reductions, and QAPLIB input.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qspp/instance.hpp"

namespace qspp {

/// min over permutations of sum a_ik b_{pi(i) pi(k)} + sum c_{i pi(i)}.
struct QapInstance {
  int n = 0;
  Matrix a;
  Matrix b;
  Matrix c;

  /// Zero matrices of order n.
  explicit QapInstance(int n = 0);
  QapInstance(Matrix a, Matrix b, Matrix c);
};

/// Brute force over all n! assignments. Returns (cost, facility -> location).
std::pair<Rational, std::vector<int>> solve_qap_brute_force(const QapInstance& qap);

/// Multigraph w_0 .. w_n with n parallel arcs per layer. Arc j * n + i runs
/// from w_j to w_{j+1} and means "facility i at location j" (its label is
/// "layer j facility i"). Diagonals of a and b are folded into the linear
/// costs first. Interaction is a_ik b_jl between arcs of different layers
/// and different facilities, and a big M between arcs of different layers
/// that reuse a facility, so every path cheaper than M is an assignment.
QsppInstance qap_to_qspp(const QapInstance& qap);

/// Reads an s-t path of the reduced instance back as facility -> location.
/// Returns nullopt when a facility repeats.
std::optional<std::vector<int>> decode_assignment(const QapInstance& qap, const Path& path);

struct QaplibParse {
  QapInstance instance;
  /// Set when an input matrix was not symmetric and got replaced by
  /// (M + M^T) / 2.
  bool symmetrized = false;
};

/// Whitespace-separated: n, then the n x n flow matrix, the n x n distance
/// matrix and optionally an n x n linear cost matrix. Integer entries only.
/// Throws ParseError with the token position on malformed input.
QaplibParse parse_qaplib(std::string_view text);

/// Two vertex pairs (s, t) and (s2, t2) for the 2-arc-disjoint paths problem.
struct DisjointPathsInstance {
  Digraph graph;
  VertexId s;
  VertexId t;
  VertexId s2;
  VertexId t2;
};

/// Vertex v maps to copies v (layer 1) and n + v (layer 2); original arc a
/// gets the midpoint vertex 2n + a. Arcs per original arc (u, v), in order:
/// (u1, N), (N, v1), (u2, N), (N, v2); then the bridge (t1, s2_2). Zero linear
/// costs, unit interaction between (u_i, N) and (N, v_j) for i != j.
/// Source s1, target t2 in layer 2.
QsppInstance disjoint_to_aqspp(const DisjointPathsInstance& dp);

/// Brute-force search for arc-disjoint s-t and s2-t2 paths.
bool has_two_arc_disjoint_paths(const DisjointPathsInstance& dp,
                                std::size_t limit = kDefaultPathLimit);

}  // namespace qspp
