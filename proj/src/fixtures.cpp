#include "cut600/fixtures.hpp"

#include <stdexcept>

namespace cut600 {

// Transcribed from the published tables. Blank cells are written as 0.

const FixtureGrid& table1_grid() {
  static const FixtureGrid grid{
      {1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 16, 18, 20, 24, 30, 32, 36, 40, 48, 72, 100, 120, 144, 192, 240, 576},
      {
          {1, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0}},
          {2, {0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0}},
          {3, {1, 21, 0, 6, 0, 3, 1, 0, 1, 2, 0, 0, 3, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
          {4, {187, 184, 2, 40, 0, 7, 6, 0, 0, 3, 0, 0, 2, 3, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
          {5, {3721, 938, 4, 79, 0, 21, 3, 0, 1, 7, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
          {6, {41551, 3924, 17, 212, 0, 34, 18, 0, 6, 8, 0, 0, 0, 2, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0}},
          {7, {321809, 12093, 53, 322, 0, 63, 4, 0, 19, 12, 0, 0, 4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
          {8, {1792727, 32714, 102, 672, 1, 102, 40, 0, 28, 17, 3, 0, 0, 6, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 0, 0}},
          {9, {7284325, 70006, 170, 815, 0, 137, 6, 0, 14, 19, 0, 1, 2, 2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
          {10, {21539704, 129924, 282, 1349, 2, 190, 43, 0, 4, 16, 0, 0, 3, 8, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0}},
          {11, {45979736, 194232, 420, 1346, 0, 251, 6, 0, 11, 15, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
          {12, {69895468, 247136, 505, 1781, 0, 236, 57, 1, 37, 21, 4, 1, 12, 5, 0, 0, 0, 1, 2, 0, 0, 1, 1, 0, 0, 0}},
          {13, {74365276, 252040, 527, 1457, 0, 266, 6, 0, 58, 20, 0, 0, 7, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0}},
          {14, {54266201, 213377, 553, 1545, 0, 255, 43, 0, 26, 31, 0, 0, 9, 7, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0}},
          {15, {26605433, 142212, 478, 1041, 2, 181, 4, 1, 5, 19, 0, 1, 4, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
          {16, {8612476, 76249, 316, 837, 0, 165, 39, 0, 5, 14, 4, 0, 0, 4, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0}},
          {17, {1824397, 31465, 216, 461, 0, 116, 4, 0, 16, 6, 0, 0, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
          {18, {252764, 10001, 123, 273, 0, 45, 20, 0, 25, 10, 0, 1, 0, 4, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
          {19, {22673, 2360, 49, 120, 0, 39, 3, 0, 12, 8, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
          {20, {1202, 388, 18, 40, 0, 17, 5, 0, 1, 7, 0, 0, 0, 2, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0}},
          {21, {22, 37, 6, 12, 0, 5, 1, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
          {22, {0, 0, 0, 0, 0, 5, 1, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
          {23, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
          {24, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      },
  };
  return grid;
}

// The published table has no row for size 23; it is present here as zeros.
const FixtureGrid& table2_grid() {
  static const FixtureGrid grid{
      {1, 2, 3, 4, 5, 6, 8, 10, 12, 16, 18, 20, 24, 30, 40, 48, 100, 144, 240, 576},
      {
          {10, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}},
          {11, {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
          {12, {18, 9, 0, 4, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0}},
          {13, {1555, 146, 0, 23, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
          {14, {39597, 980, 0, 52, 0, 4, 4, 0, 0, 0, 0, 2, 0, 0, 1, 0, 0, 0, 0, 0}},
          {15, {221823, 2997, 9, 64, 2, 4, 0, 3, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0}},
          {16, {341592, 4573, 10, 113, 0, 16, 7, 0, 11, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0}},
          {17, {192266, 4081, 9, 59, 0, 7, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
          {18, {49741, 2251, 19, 54, 0, 26, 8, 0, 2, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
          {19, {6771, 838, 7, 39, 0, 7, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
          {20, {598, 199, 6, 14, 0, 12, 2, 1, 5, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0}},
          {21, {17, 20, 2, 11, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
          {22, {0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0}},
          {23, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
          {24, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      },
  };
  return grid;
}

const std::vector<Table3Row>& table3_fixture() {
  static const std::vector<Table3Row> rows{
      {24, 576, true, false, {{96, "V", "C3v"}}},
      {20, 240, true, false, {{40, "V", "C3v"}, {60, "IV", "C2v"}}},
      {16, 192, false, true, {{96, "IV", "Cs"}, {8, "I", "Th"}}},
      {8, 192, false, true, {{96, "II", "Cs"}, {16, "I", "T"}}},
      {12, 144, true, true, {{36, "IV", "C2v"}, {72, "II", "Cs"}}},
      {10, 100, true, true, {{100, "II", "C1"}, {10, "III", "D5"}}},
  };
  return rows;
}

CountTable FixtureGrid::table() const {
  CountTable t;
  for (const auto& row : rows) {
    if (row.counts.size() != columns.size()) throw std::logic_error("fixture row has the wrong width");
    for (std::size_t i = 0; i < columns.size(); ++i) t.add(row.size, columns[i], row.counts[i]);
  }
  return t;
}

CountTable table1_fixture() { return table1_grid().table(); }
CountTable table2_fixture() { return table2_grid().table(); }

}  // namespace cut600
