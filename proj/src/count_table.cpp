#include "cut600/count_table.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cut600/vertex_set.hpp"

namespace cut600 {

void CountTable::add(int size, int stab_order, std::uint64_t n) {
  if (n == 0) return;
  cells_[{size, stab_order}] += n;
}

void CountTable::merge(const CountTable& other) {
  for (const auto& [key, n] : other.cells_) cells_[key] += n;
}

std::uint64_t CountTable::get(int size, int stab_order) const {
  auto it = cells_.find({size, stab_order});
  return it == cells_.end() ? 0 : it->second;
}

std::uint64_t CountTable::row_total(int size) const {
  std::uint64_t t = 0;
  for (auto it = cells_.lower_bound({size, 0}); it != cells_.end() && it->first.first == size; ++it)
    t += it->second;
  return t;
}

std::uint64_t CountTable::total() const {
  std::uint64_t t = 0;
  for (const auto& [key, n] : cells_) t += n;
  return t;
}

std::vector<int> CountTable::sizes() const {
  std::vector<int> out;
  for (const auto& [key, n] : cells_)
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  return out;
}

std::vector<std::pair<int, std::uint64_t>> CountTable::row(int size) const {
  std::vector<std::pair<int, std::uint64_t>> out;
  for (auto it = cells_.lower_bound({size, 0}); it != cells_.end() && it->first.first == size; ++it)
    out.emplace_back(it->first.second, it->second);
  return out;
}

CountTable CountTable::restricted(int lo, int hi) const {
  CountTable t;
  for (const auto& [key, n] : cells_)
    if (key.first >= lo && key.first <= hi) t.cells_.emplace(key, n);
  return t;
}

void CountTable::write_csv(std::ostream& os) const {
  os << "size,stab_order,count\n";
  for (const auto& [key, n] : cells_) os << key.first << ',' << key.second << ',' << n << '\n';
  os << "total,," << total() << '\n';
}

CountTable CountTable::read_csv(std::istream& is) {
  CountTable t;
  std::string line;
  if (!std::getline(is, line) || line != "size,stab_order,count")
    throw std::runtime_error("count CSV: missing header");
  bool saw_total = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("total,,", 0) == 0) {
      if (std::stoull(line.substr(7)) != t.total()) throw std::runtime_error("count CSV: total mismatch");
      saw_total = true;
      continue;
    }
    std::istringstream ls(line);
    int size = 0, stab = 0;
    std::uint64_t n = 0;
    char c1 = 0, c2 = 0;
    if (!(ls >> size >> c1 >> stab >> c2 >> n) || c1 != ',' || c2 != ',')
      throw std::runtime_error("count CSV: bad row '" + line + "'");
    t.add(size, stab, n);
  }
  if (!saw_total) throw std::runtime_error("count CSV: missing total line");
  return t;
}

std::vector<std::string> diff_tables(const CountTable& expected, const CountTable& actual,
                                     const std::string& expected_name, const std::string& actual_name) {
  std::vector<std::string> out;
  std::map<CountTable::Key, std::pair<std::uint64_t, std::uint64_t>> both;
  for (const auto& [key, n] : expected.cells()) both[key].first = n;
  for (const auto& [key, n] : actual.cells()) both[key].second = n;
  for (const auto& [key, pair] : both) {
    if (pair.first == pair.second) continue;
    std::ostringstream os;
    os << "size " << key.first << " stab " << key.second << ": " << expected_name << '=' << pair.first
       << ' ' << actual_name << '=' << pair.second;
    out.push_back(os.str());
  }
  return out;
}

std::uint64_t labeled_count_check(const CountTable& table, int size) {
  std::uint64_t labeled = 0;
  for (const auto& [stab, n] : table.row(size)) {
    if (stab <= 0 || kGroupOrder % stab != 0)
      throw std::domain_error("stabilizer order " + std::to_string(stab) + " does not divide 14400");
    labeled += n * static_cast<std::uint64_t>(kGroupOrder / stab);
  }
  return labeled;
}

}  // namespace cut600
