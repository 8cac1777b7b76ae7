#ifndef CUT600_COUNT_TABLE_HPP
#define CUT600_COUNT_TABLE_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cut600 {

/// Orbit counts keyed by (cut size, stabilizer order). Zero entries are
/// never stored, so two tables compare equal iff all their cells agree.
class CountTable {
 public:
  using Key = std::pair<int, int>;  // (size, stabilizer order)

  void add(int size, int stab_order, std::uint64_t n = 1);
  void merge(const CountTable& other);

  std::uint64_t get(int size, int stab_order) const;
  std::uint64_t row_total(int size) const;
  std::uint64_t total() const;
  /// Sizes with at least one nonzero cell, ascending.
  std::vector<int> sizes() const;
  /// (stabilizer order, count) pairs of one row, ascending by order.
  std::vector<std::pair<int, std::uint64_t>> row(int size) const;
  /// Only rows with lo <= size <= hi.
  CountTable restricted(int lo, int hi) const;

  const std::map<Key, std::uint64_t>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }

  /// CSV with header "size,stab_order,count", rows ascending, followed by a
  /// "total,,<n>" line.
  void write_csv(std::ostream& os) const;
  /// Accepts what write_csv produces; the total line is checked.
  static CountTable read_csv(std::istream& is);

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  std::map<Key, std::uint64_t> cells_;
};

/// Differences between two tables, one human-readable line per cell.
std::vector<std::string> diff_tables(const CountTable& expected, const CountTable& actual,
                                     const std::string& expected_name = "expected",
                                     const std::string& actual_name = "actual");

/// Sum over the orbits of one size of 14400 / stabilizer order, i.e. the
/// number of labeled independent sets of that size. Throws
/// std::domain_error if some stabilizer order does not divide 14400.
std::uint64_t labeled_count_check(const CountTable& table, int size);

}  // namespace cut600

#endif  // CUT600_COUNT_TABLE_HPP
