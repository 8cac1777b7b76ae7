#ifndef CUT600_VERTEX_SET_HPP
#define CUT600_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace cut600 {

inline constexpr int kNumVertices = 120;
inline constexpr int kGroupOrder = 14400;

using Vertex = std::uint8_t;

/// Membership vector over the 120 vertices, two machine words.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static VertexSet all() {
    VertexSet s;
    s.w_[0] = ~0ULL;
    s.w_[1] = (1ULL << (kNumVertices - 64)) - 1;
    return s;
  }
  /// Vertices strictly greater than v.
  static VertexSet above(int v) {
    VertexSet s = all();
    for (int w = 0; w <= v; ++w) s.reset(w);
    return s;
  }
  template <class Range>
  static VertexSet of(const Range& members) {
    VertexSet s;
    for (auto v : members) s.set(static_cast<int>(v));
    return s;
  }

  constexpr void set(int v) { w_[v >> 6] |= 1ULL << (v & 63); }
  constexpr void reset(int v) { w_[v >> 6] &= ~(1ULL << (v & 63)); }
  constexpr bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1ULL; }

  constexpr bool empty() const { return (w_[0] | w_[1]) == 0; }
  int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  /// Smallest member; undefined on the empty set.
  int lowest() const {
    return w_[0] ? std::countr_zero(w_[0]) : 64 + std::countr_zero(w_[1]);
  }
  /// Removes and returns the smallest member.
  int pop_lowest() {
    const int v = lowest();
    reset(v);
    return v;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    VertexSet s = *this;
    while (!s.empty()) out.push_back(s.pop_lowest());
    return out;
  }

  constexpr VertexSet& operator&=(const VertexSet& o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  constexpr VertexSet& operator|=(const VertexSet& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  constexpr VertexSet& operator^=(const VertexSet& o) {
    w_[0] ^= o.w_[0];
    w_[1] ^= o.w_[1];
    return *this;
  }
  /// Set difference.
  constexpr VertexSet& operator-=(const VertexSet& o) {
    w_[0] &= ~o.w_[0];
    w_[1] &= ~o.w_[1];
    return *this;
  }
  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

  /// For two sets of equal cardinality: true iff the sorted member list of
  /// *this is lexicographically smaller than that of o. The first position
  /// where the lists differ holds the smallest element of the symmetric
  /// difference, so it suffices to see which side owns that element.
  bool lex_less_same_size(const VertexSet& o) const {
    const VertexSet d = *this ^ o;
    return !d.empty() && test(d.lowest());
  }

  std::uint64_t word(int i) const { return w_[i]; }

 private:
  std::uint64_t w_[2] = {0, 0};
};

}  // namespace cut600

#endif  // CUT600_VERTEX_SET_HPP
