#include "cut600/symmetric.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cut600 {

std::vector<std::vector<int>> conjugacy_classes(const Model& model) {
  const int order = model.group_size();
  std::vector<int> class_of(order, -1);
  std::vector<std::vector<int>> classes;
  for (int g = 0; g < order; ++g) {
    if (class_of[g] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    classes.emplace_back();
    const Perm& pg = model.perm(g);
    for (int h = 0; h < order; ++h) {
      // (h g h^-1)(h(x)) = h(g(x))
      const Perm& ph = model.perm(h);
      Perm conj;
      for (int x = 0; x < kNumVertices; ++x) conj[ph[x]] = ph[pg[x]];
      const int c = model.find(conj);
      if (c < 0) throw std::logic_error("conjugate is not a group element");
      if (class_of[c] < 0) {
        class_of[c] = id;
        classes.back().push_back(c);
      }
    }
    std::sort(classes.back().begin(), classes.back().end());
  }
  return classes;
}

namespace {

int largest_prime_factor(int n) {
  int best = 1;
  for (int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      best = p;
      n /= p;
    }
  return n > 1 ? std::max(best, n) : best;
}

class OrbitUnionSearch {
 public:
  OrbitUnionSearch(const Model& model, const std::vector<VertexSet>& orbits, int target)
      : model_(model), orbits_(orbits), target_(target) {
    for (const auto& o : orbits_) {
      VertexSet closed = o;
      for (int v : o.members()) closed |= model_.neighbors(v);
      closed_.push_back(closed);
      sizes_.push_back(o.count());
    }
    suffix_.assign(orbits_.size() + 1, 0);
    for (int i = static_cast<int>(orbits_.size()) - 1; i >= 0; --i) suffix_[i] = suffix_[i + 1] + sizes_[i];
  }

  std::vector<VertexSet> run() {
    rec(0, VertexSet{}, VertexSet{}, 0);
    return std::move(found_);
  }

 private:
  void rec(std::size_t next, const VertexSet& chosen, const VertexSet& blocked, int size) {
    if (size == target_) {
      found_.push_back(chosen);
      return;
    }
    if (size + suffix_[next] < target_) return;
    for (std::size_t i = next; i < orbits_.size(); ++i) {
      if (size + sizes_[i] > target_ || !(orbits_[i] & blocked).empty()) continue;
      if (size + suffix_[i] < target_) return;
      rec(i + 1, chosen | orbits_[i], blocked | closed_[i], size + sizes_[i]);
    }
  }

  const Model& model_;
  const std::vector<VertexSet>& orbits_;
  int target_;
  std::vector<VertexSet> closed_;
  std::vector<int> sizes_;
  std::vector<int> suffix_;
  std::vector<VertexSet> found_;
};

}  // namespace

std::vector<Cut> find_cuts_with_symmetry(const Model& model, int size, int stab_order) {
  if (stab_order <= 1 || kGroupOrder % stab_order != 0)
    throw std::invalid_argument("stabilizer order must be a divisor of 14400 greater than 1");
  if (size < 0 || size > kNumVertices) throw std::invalid_argument("bad cut size");
  const int p = largest_prime_factor(stab_order);

  std::set<Cut> result;
  for (const auto& cls : conjugacy_classes(model)) {
    const int g = cls.front();
    if (model.element_order(g) != p) continue;

    std::vector<VertexSet> orbits;
    std::vector<char> seen(kNumVertices, 0);
    const Perm& pg = model.perm(g);
    for (int v = 0; v < kNumVertices; ++v) {
      if (seen[v]) continue;
      VertexSet orbit;
      for (int w = v; !seen[w]; w = pg[w]) {
        seen[w] = 1;
        orbit.set(w);
      }
      bool independent = true;
      for (int w : orbit.members()) independent = independent && (model.neighbors(w) & orbit).empty();
      if (independent) orbits.push_back(orbit);
    }

    for (const VertexSet& s : OrbitUnionSearch(model, orbits, size).run()) {
      const Cut cut = Cut::from_set(s);
      if (static_cast<int>(stabilizer(model, cut).size()) != stab_order) continue;
      result.insert(min_image(model, cut));
    }
  }
  return {result.begin(), result.end()};
}

}  // namespace cut600
