#ifndef CUT600_ORACLE_HPP
#define CUT600_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cut600/count_table.hpp"
#include "cut600/group.hpp"
#include "cut600/model.hpp"

namespace cut600 {

inline constexpr int kOracleMaxSize = 5;

/// Orbit representatives found by brute force, per size.
struct OrbitLedger {
  int k_max = 0;
  /// representatives[k]: min_image representative -> stabilizer order.
  std::vector<std::map<Cut, int>> representatives;
  /// labeled[k]: number of labeled independent sets of size k seen.
  std::vector<std::uint64_t> labeled;

  CountTable table() const;
};

/// Enumerates every labeled independent set of size 1..k_max by plain
/// recursion, canonicalises each with min_image and deduplicates. Shares
/// no search logic with the orderly engine. Throws std::invalid_argument
/// when k_max is outside [0, 5].
OrbitLedger brute_force_orbits(const Model& model, int k_max = 4);

struct Agreement {
  bool agree = false;
  std::vector<std::string> diff;
};

/// Compares per-(size, stabilizer order) counts for sizes 1..k_max.
Agreement agree(const OrbitLedger& ledger, const CountTable& table);

}  // namespace cut600

#endif  // CUT600_ORACLE_HPP
