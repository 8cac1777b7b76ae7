#ifndef CUT600_TESTS_SUPPORT_HPP
#define CUT600_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "cut600/group.hpp"
#include "cut600/model.hpp"

namespace test_support {

inline const cut600::Model& model() {
  static const cut600::Model m = cut600::Model::build();
  return m;
}

// Random independent set of the given size, grown greedily.
inline cut600::Cut random_cut(std::mt19937& rng, int size) {
  const auto& m = model();
  for (;;) {
    cut600::VertexSet allowed = cut600::VertexSet::all();
    std::vector<int> members;
    while (static_cast<int>(members.size()) < size && !allowed.empty()) {
      const auto pool = allowed.members();
      const int v = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      members.push_back(v);
      allowed.reset(v);
      allowed -= m.neighbors(v);
    }
    if (static_cast<int>(members.size()) == size) return cut600::Cut::from_unsorted(members);
  }
}

}  // namespace test_support

#endif  // CUT600_TESTS_SUPPORT_HPP
