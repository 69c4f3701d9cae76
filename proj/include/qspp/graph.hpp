#pragma once

// Directed multigraphs with stable arc ids, the graph families used
// throughout the library, and s-t path machinery.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qspp/rational.hpp"

namespace qspp {

struct VertexId {
  int index = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct ArcId {
  int index = 0;
  friend auto operator<=>(const ArcId&, const ArcId&) = default;
};

/// An arc runs from `head` to `tail` (the head is where it starts).
struct Arc {
  VertexId head;
  VertexId tail;
  std::string label;
};

/// Immutable directed multigraph. Arcs are identified by their position in
/// the arc list; parallel arcs are allowed, self-loops are not.
class Digraph {
 public:
  Digraph() = default;
  /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
  Digraph(int vertex_count, std::vector<Arc> arcs);

  int vertex_count() const { return vertex_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  const Arc& arc(ArcId e) const { return arcs_[e.index]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Arcs leaving / entering v, in increasing id order.
  std::span<const ArcId> out_arcs(VertexId v) const { return out_[v.index]; }
  std::span<const ArcId> in_arcs(VertexId v) const { return in_[v.index]; }

  /// All arcs from u to v, in increasing id order.
  std::vector<ArcId> find_arcs(VertexId u, VertexId v) const;

  bool valid(VertexId v) const { return v.index >= 0 && v.index < vertex_count_; }
  bool valid(ArcId e) const { return e.index >= 0 && e.index < arc_count(); }

  /// Same vertex count and same arc endpoints in the same order. Labels are
  /// ignored.
  bool same_structure(const Digraph& other) const;

 private:
  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
};

/// A simple directed path, stored as its arc sequence together with the
/// vertex sequence it visits.
class Path {
 public:
  /// Validates that the arcs chain and no vertex repeats.
  static Path from_arcs(const Digraph& g, std::vector<ArcId> arcs);
  /// Picks, for each consecutive pair, the lowest-id arc joining them.
  static Path from_vertices(const Digraph& g, const std::vector<VertexId>& vertices);

  const std::vector<ArcId>& arcs() const { return arcs_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  VertexId source() const { return vertices_.front(); }
  VertexId target() const { return vertices_.back(); }
  /// Number of arcs.
  int length() const { return static_cast<int>(arcs_.size()); }
  bool contains(ArcId e) const;

  /// 0/1 indicator of the arcs of the path, length m.
  Eigen::VectorXi characteristic_vector(int arc_count) const;

  friend bool operator==(const Path& a, const Path& b) { return a.arcs_ == b.arcs_; }

 private:
  std::vector<ArcId> arcs_;
  std::vector<VertexId> vertices_;
};

/// Shape of a directed grid G_{p,q}. Vertex (i, j) is 0-based, row i in
/// [0, p), column j in [0, q), and maps to index i * q + j. Arc ids list
/// all downward arcs (row-major by their upper endpoint) before all
/// rightward arcs (row-major by their left endpoint).
struct GridShape {
  int p = 2;
  int q = 2;

  int vertex_count() const { return p * q; }
  int arc_count() const { return 2 * p * q - p - q; }
  VertexId vertex(int i, int j) const { return {i * q + j}; }
  /// (i, j) -> (i + 1, j)
  ArcId down(int i, int j) const { return {i * q + j}; }
  /// (i, j) -> (i, j + 1)
  ArcId right(int i, int j) const { return {(p - 1) * q + i * (q - 1) + j}; }
  VertexId source() const { return vertex(0, 0); }
  VertexId sink() const { return vertex(p - 1, q - 1); }

  friend bool operator==(const GridShape&, const GridShape&) = default;
};

inline constexpr std::size_t kDefaultPathLimit = 1'000'000;

Digraph make_grid(int p, int q);

/// Complete symmetric digraph K_n^*. When `simplified`, arcs into s, out of
/// t and the arc (s, t) are dropped, and the remaining arcs are ordered as
/// arcs leaving s, then arcs between inner vertices, then arcs entering t.
Digraph make_complete_symmetric(int n, bool simplified, VertexId s, VertexId t);

/// Arcs (i, i + 1 mod n); arc i leaves vertex i.
Digraph make_directed_cycle(int n);

/// Vertex v is the bit string with binary value v; arc u -> u | (1 << b).
Digraph make_hypercube(int n);

/// One arc per pair i < j, pairs in lexicographic order; bit k of
/// `orientation_bits` set means pair k is oriented j -> i.
Digraph make_tournament(int n, std::uint64_t orientation_bits);

/// Recovers the grid shape if `g` is exactly make_grid(p, q) for some p, q.
std::optional<GridShape> recognize_grid(const Digraph& g);

bool is_directed_cycle(const Digraph& g);
bool is_simplified_complete(const Digraph& g, VertexId s, VertexId t);
bool is_tournament(const Digraph& g);

struct PathEnumeration {
  std::vector<Path> paths;
  /// Set when more than `limit` paths exist; `paths` then holds the first
  /// `limit` of them.
  bool overflow = false;
};

/// Depth-first enumeration of all simple s-t paths. Out-arcs are explored
/// in increasing id order, so paths come out lexicographically by arc id.
PathEnumeration enumerate_st_paths(const Digraph& g, VertexId s, VertexId t,
                                   std::size_t limit = kDefaultPathLimit);

/// Kahn's algorithm; ties are broken by lowest vertex index.
std::optional<std::vector<VertexId>> topological_order(const Digraph& g);
bool is_acyclic(const Digraph& g);

/// Vertices reachable from s (forward) or reaching t (backward).
std::vector<bool> reachable_from(const Digraph& g, VertexId s);
std::vector<bool> reaching(const Digraph& g, VertexId t);

/// binomial(p + q - 2, p - 1)
BigInt count_grid_paths(int p, int q);

}  // namespace qspp
