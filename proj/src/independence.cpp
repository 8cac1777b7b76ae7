#include "cut600/independence.hpp"

namespace cut600 {

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Model& model, int target, bool first_only)
      : model_(model), target_(target), first_only_(first_only) {}

  std::vector<Cut> run() {
    if (target_ <= 0) return {};
    members_.push_back(0);
    rec(candidates_after_zero(model_));
    return std::move(found_);
  }

  static VertexSet candidates_after_zero(const Model& model) {
    VertexSet cand = VertexSet::all() - model.neighbors(0);
    cand.reset(0);
    return cand;
  }

  int cover_bound(VertexSet p) const {
    int cliques = 0;
    while (!p.empty()) {
      const int v = p.lowest();
      VertexSet best;
      best.set(v);
      int best_count = 1;
      for (int c : model_.cells_of(v)) {
        VertexSet clique;
        for (Vertex w : model_.cells()[c]) clique.set(w);
        clique &= p;
        const int n = clique.count();
        if (n > best_count) {
          best = clique;
          best_count = n;
          if (n == 4) break;
        }
      }
      p -= best;
      ++cliques;
    }
    return cliques;
  }

  void rec(VertexSet cand) {
    const int have = static_cast<int>(members_.size());
    if (have == target_) {
      found_.emplace_back(members_);
      return;
    }
    while (!cand.empty() && !(first_only_ && !found_.empty())) {
      if (have + cover_bound(cand) < target_) return;
      const int v = cand.pop_lowest();
      members_.push_back(v);
      rec(cand - model_.neighbors(v));
      members_.pop_back();
    }
  }

  const Model& model_;
  int target_;
  bool first_only_;
  std::vector<int> members_;
  std::vector<Cut> found_;
};

}  // namespace

std::vector<Cut> independent_sets_through_zero(const Model& model, int size) {
  return BranchAndBound(model, size, false).run();
}

int independence_number(const Model& model) {
  // Some maximum independent set contains vertex 0, so 1 + the cover bound
  // of the non-neighbours of 0 bounds it from above.
  const BranchAndBound probe(model, 0, true);
  int size = 1 + probe.cover_bound(BranchAndBound::candidates_after_zero(model));
  while (size > 1 && BranchAndBound(model, size, true).run().empty()) --size;
  return size;
}

}  // namespace cut600
