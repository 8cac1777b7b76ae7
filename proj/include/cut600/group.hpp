#ifndef CUT600_GROUP_HPP
#define CUT600_GROUP_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cut600/model.hpp"
#include "cut600/vertex_set.hpp"

namespace cut600 {

/// A special cut: a strictly increasing list of vertex indices. Independence
/// is a property checked against a model (see validate_cut), not enforced by
/// construction, so that invalid input can be reported precisely.
class Cut {
 public:
  Cut() = default;
  /// Throws std::invalid_argument unless members are strictly increasing
  /// and within [0, 120).
  explicit Cut(std::vector<int> members);
  /// Sorts first; duplicates are still an error.
  static Cut from_unsorted(std::vector<int> members);
  static Cut from_set(const VertexSet& s) { return Cut(s.members()); }
  /// Parses "i,j,k" (whitespace tolerated). Empty string is the empty cut.
  static Cut parse(std::string_view text);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  int operator[](int i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  bool contains(int v) const { return bits().test(v); }
  VertexSet bits() const { return VertexSet::of(members_); }
  /// Comma-separated sorted indices.
  std::string str() const;

  friend auto operator<=>(const Cut&, const Cut&) = default;
  friend bool operator==(const Cut&, const Cut&) = default;

 private:
  std::vector<int> members_;
};

/// The first adjacent pair (u < v) inside the cut, if any.
std::optional<std::pair<int, int>> find_adjacent_pair(const Model& model, const Cut& cut);
bool is_independent(const Model& model, const Cut& cut);
/// Throws std::invalid_argument naming the offending pair.
void validate_cut(const Model& model, const Cut& cut);

inline VertexSet image(const Perm& p, const VertexSet& s) {
  VertexSet out;
  for (VertexSet rest = s; !rest.empty();) out.set(p[rest.pop_lowest()]);
  return out;
}
/// Sorted image g(C).
Cut image(const Model& model, int g, const Cut& cut);

/// Number of distinct images g(C).
std::int64_t orbit_size(const Model& model, const Cut& cut);
/// Group indices of all g with g(C) = C.
std::vector<int> stabilizer(const Model& model, const Cut& cut);

/// True iff no image of C is lexicographically smaller than C. Only
/// elements sending some member of C to vertex 0 can produce a smaller
/// image once C starts at 0, so only those are scanned.
bool is_lex_min(const Model& model, const Cut& cut);
/// Lexicographically smallest image of C over the group.
Cut min_image(const Model& model, const Cut& cut);

/// Hot-path lex-min test used by the enumeration engine; also yields the
/// stabilizer order of a minimal set in the same pass.
///
/// For a set C containing 0, an image g(C) can be <= C only if g sends some
/// member c to 0 and some other member d to C[1]. For each ordered vertex
/// pair (c, d) the tester stores the smallest vertex d can reach while c
/// goes to 0, together with the elements realising it. A pair reaching
/// below C[1] proves C is not minimal; pairs reaching exactly C[1] supply
/// the only elements that need a full image comparison. Every stabilizer
/// element is among them.
class LexMinTester {
 public:
  explicit LexMinTester(const Model& model);

  struct Result {
    bool minimal = false;
    int stabilizer_order = 0;  // valid only when minimal
  };

  /// members must be sorted and agree with bits.
  Result test(std::span<const Vertex> members, const VertexSet& bits) const;

 private:
  const Vertex* perm(int g) const { return perms_.data() + static_cast<std::size_t>(g) * kNumVertices; }

  std::vector<Vertex> perms_;            // group permutations, flattened
  std::vector<Vertex> pair_min_;         // [c * 120 + d]
  std::vector<std::uint32_t> pair_off_;  // [c * 120 + d], offsets into pair_elems_
  std::vector<std::uint16_t> pair_elems_;
  int point_stabilizer_order_ = 0;
};

}  // namespace cut600

#endif  // CUT600_GROUP_HPP
