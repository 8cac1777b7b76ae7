#ifndef CUT600_FIXTURES_HPP
#define CUT600_FIXTURES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cut600/count_table.hpp"

namespace cut600 {

/// A published count table in its printed layout: one column per
/// stabilizer order, one row per cut size, zeros where the print is blank.
struct FixtureGrid {
  std::vector<int> columns;
  struct Row {
    int size = 0;
    std::vector<std::uint64_t> counts;
  };
  std::vector<Row> rows;

  CountTable table() const;
};

/// Orbits of special cuts by size (1..24) and stabilizer order.
const FixtureGrid& table1_grid();
/// Orbits of maximal special cuts by size (10..24) and stabilizer order.
const FixtureGrid& table2_grid();
CountTable table1_fixture();
CountTable table2_fixture();

struct Table3Orbit {
  int size = 0;
  std::string type;         // I..V
  std::string point_group;  // ASCII Schoenflies symbol, e.g. "C3v"
};

/// Highly symmetric special cuts with their vertex-orbit profiles.
struct Table3Row {
  int size = 0;
  int stab_order = 0;
  bool maximal = false;
  bool connected = false;
  std::vector<Table3Orbit> orbits;
};
const std::vector<Table3Row>& table3_fixture();

}  // namespace cut600

#endif  // CUT600_FIXTURES_HPP
