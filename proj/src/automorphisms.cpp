#include <vector>

#include "cut600/model.hpp"

namespace cut600 {

namespace {

class AutomorphismCounter {
 public:
  explicit AutomorphismCounter(const Model& model) : model_(model), image_(kNumVertices, -1) {
    // Breadth-first order, so every vertex after the first has an already
    // mapped neighbour and few candidates.
    std::vector<char> seen(kNumVertices, 0);
    order_.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (int w : model_.neighbors(order_[i]).members())
        if (!seen[w]) {
          seen[w] = 1;
          order_.push_back(w);
        }
  }

  std::int64_t run() {
    if (static_cast<int>(order_.size()) != kNumVertices) return 0;  // disconnected; not expected
    rec(0);
    return count_;
  }

 private:
  void rec(std::size_t depth) {
    if (depth == order_.size()) {
      ++count_;
      return;
    }
    const int v = order_[depth];
    VertexSet cand = VertexSet::all() - used_;
    for (std::size_t i = 0; i < depth && !cand.empty(); ++i) {
      const int x = order_[i];
      if (model_.adjacent(v, x))
        cand &= model_.neighbors(image_[x]);
      else
        cand -= model_.neighbors(image_[x]);
    }
    while (!cand.empty()) {
      const int u = cand.pop_lowest();
      image_[v] = u;
      used_.set(u);
      rec(depth + 1);
      used_.reset(u);
      image_[v] = -1;
    }
  }

  const Model& model_;
  std::vector<int> order_;
  std::vector<int> image_;
  VertexSet used_;
  std::int64_t count_ = 0;
};

}  // namespace

std::int64_t count_graph_automorphisms(const Model& model) { return AutomorphismCounter(model).run(); }

}  // namespace cut600
