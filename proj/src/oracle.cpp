#include "cut600/oracle.hpp"

#include <stdexcept>
#include <unordered_map>

namespace cut600 {

namespace {

struct SetHash {
  std::size_t operator()(const VertexSet& s) const {
    return std::hash<std::uint64_t>()(s.word(0) * 0x9e3779b97f4a7c15ULL ^ (s.word(1) + 0x632be59bd9b4e019ULL));
  }
};

class BruteForce {
 public:
  BruteForce(const Model& model, int k_max) : model_(model), k_max_(k_max), found_(k_max + 1) {
    ledger_.k_max = k_max;
    ledger_.labeled.assign(k_max + 1, 0);
    ledger_.representatives.resize(k_max + 1);
  }

  OrbitLedger run() {
    std::vector<int> current;
    extend(current, VertexSet::all());
    ledger_.labeled[0] = 1;
    if (k_max_ >= 0) ledger_.representatives[0].emplace(Cut{}, kGroupOrder);
    for (int k = 1; k <= k_max_; ++k)
      for (const auto& [bits, stab] : found_[k]) ledger_.representatives[k].emplace(Cut::from_set(bits), stab);
    return std::move(ledger_);
  }

 private:
  void extend(std::vector<int>& current, const VertexSet& allowed) {
    if (static_cast<int>(current.size()) == k_max_) return;
    for (VertexSet rest = allowed; !rest.empty();) {
      const int v = rest.pop_lowest();
      current.push_back(v);
      record(current);
      extend(current, rest - model_.neighbors(v));
      current.pop_back();
    }
  }

  void record(const std::vector<int>& current) {
    const int k = static_cast<int>(current.size());
    ++ledger_.labeled[k];
    const Cut canonical = min_image(model_, Cut(current));
    const VertexSet key = canonical.bits();
    auto& bucket = found_[k];
    if (bucket.find(key) == bucket.end())
      bucket.emplace(key, static_cast<int>(stabilizer(model_, canonical).size()));
  }

  const Model& model_;
  int k_max_;
  std::vector<std::unordered_map<VertexSet, int, SetHash>> found_;
  OrbitLedger ledger_;
};

}  // namespace

CountTable OrbitLedger::table() const {
  CountTable t;
  for (int k = 1; k < static_cast<int>(representatives.size()); ++k)
    for (const auto& [cut, stab] : representatives[k]) t.add(k, stab);
  return t;
}

OrbitLedger brute_force_orbits(const Model& model, int k_max) {
  if (k_max < 0 || k_max > kOracleMaxSize)
    throw std::invalid_argument("oracle k_max must be in [0, " + std::to_string(kOracleMaxSize) + "]");
  return BruteForce(model, k_max).run();
}

Agreement agree(const OrbitLedger& ledger, const CountTable& table) {
  Agreement a;
  a.diff = diff_tables(ledger.table(), table.restricted(1, ledger.k_max), "oracle", "engine");
  a.agree = a.diff.empty();
  return a;
}

}  // namespace cut600
