#ifndef CUT600_MODEL_HPP
#define CUT600_MODEL_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cut600/golden.hpp"
#include "cut600/vertex_set.hpp"

namespace cut600 {

using Perm = std::array<Vertex, kNumVertices>;
using Cell = std::array<Vertex, 4>;
using Edge = std::array<Vertex, 2>;

/// A symmetry of the 600-cell, realised as q -> a q b or q -> a conj(q) b
/// for icosians a, b (given as vertex indices).
struct GroupElement {
  Perm perm{};
  int left = 0;
  int right = 0;
  bool conjugating = false;  // improper (det -1) iff true
};

/// 4x4 matrix over Z[phi], row-major.
using GoldenMatrix4 = std::array<std::array<GoldenInt, 4>, 4>;

GoldenInt determinant(const GoldenMatrix4& m);
GoldenInt trace(const GoldenMatrix4& m);

// Construction steps, exposed individually so each can be checked.

/// The 120 vertices at 2x scale, sorted lexicographically on their
/// coefficient tuples.
std::vector<Quat> build_vertices();
/// u ~ v iff inner4(u, v) == 2 phi.
std::vector<VertexSet> build_adjacency(std::span<const Quat> vertices);
/// All 4-cliques, sorted. Throws std::logic_error if a 5-clique exists.
std::vector<Cell> build_cells(std::span<const VertexSet> adjacency);
/// All maps q -> a q b and q -> a conj(q) b as vertex permutations,
/// deduplicated and sorted by permutation. Throws std::logic_error unless
/// exactly 14,400 adjacency-preserving permutations result.
std::vector<GroupElement> build_group(std::span<const Quat> vertices,
                                      std::span<const VertexSet> adjacency);

/// The canonical 600-cell instance. Immutable after construction and safe to
/// share read-only between threads.
class Model {
 public:
  static Model build();

  /// Same polytope with vertex i of the result being vertex new_to_old[i]
  /// of *this. Used to check that results do not depend on the numbering.
  Model relabeled(std::span<const int> new_to_old) const;

  const std::vector<Quat>& vertices() const { return vertices_; }
  const Quat& vertex(int v) const { return vertices_[v]; }
  /// -1 when q is not a vertex.
  int index_of(const Quat& q) const;

  const VertexSet& neighbors(int v) const { return adjacency_[v]; }
  const std::vector<VertexSet>& adjacency() const { return adjacency_; }
  bool adjacent(int u, int v) const { return adjacency_[u].test(v); }
  std::vector<Edge> edges() const;

  const std::vector<Cell>& cells() const { return cells_; }
  /// Indices into cells() of the cells containing v.
  const std::vector<int>& cells_of(int v) const { return vertex_cells_[v]; }

  const std::vector<GroupElement>& group() const { return group_; }
  const Perm& perm(int g) const { return group_[g].perm; }
  int group_size() const { return static_cast<int>(group_.size()); }
  /// Index of the identity permutation.
  int identity() const { return identity_; }
  /// Group index of p, or -1 if p is not a group element.
  int find(const Perm& p) const;
  /// (g o h)(x) = g(h(x)).
  int compose(int g, int h) const;
  int inverse(int g) const { return inverse_[g]; }
  /// g^-1(0) for every element g, in group order.
  const std::vector<Vertex>& zero_preimages() const { return zero_preimage_; }
  int element_order(int g) const;

  /// Matrix of element g acting on 2x-scaled coordinates, itself scaled by 2
  /// (so its determinant is +-16).
  GoldenMatrix4 element_matrix(int g) const;

  /// Icosian product of vertices, as a vertex index.
  int multiply(int u, int v) const;
  /// The vertex -v.
  int antipode(int v) const { return antipode_[v]; }

  /// 64-bit FNV-1a over the vertex coordinates, in order, and the group.
  std::uint64_t fingerprint() const { return fingerprint_; }

  /// Deterministic line-oriented dump: vertices, edges, cells, group.
  void export_text(std::ostream& os) const;

  /// Test hook: drop the edge {u, v} from the adjacency structure.
  void corrupt_remove_edge(int u, int v);

 private:
  Model() = default;
  void finish();

  std::vector<Quat> vertices_;
  std::map<Quat, int> index_;
  std::vector<VertexSet> adjacency_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> vertex_cells_;
  std::vector<GroupElement> group_;
  std::unordered_map<std::string, int> perm_index_;
  std::vector<int> inverse_;
  std::vector<Vertex> zero_preimage_;
  std::vector<int> antipode_;
  int identity_ = -1;
  std::uint64_t fingerprint_ = 0;
};

/// Checks every structural invariant of the model and returns a list of
/// violations (empty when all hold).
std::vector<std::string> verify_model(const Model& model);

/// Number of 3-cliques of the skeleton.
int count_triangles(const Model& model);

/// Order of the automorphism group of the skeleton graph, by exhaustive
/// backtracking over vertex maps (no use of the quaternion construction).
std::int64_t count_graph_automorphisms(const Model& model);

}  // namespace cut600

#endif  // CUT600_MODEL_HPP
