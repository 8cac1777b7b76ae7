#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cut600/fixtures.hpp"

using namespace cut600;

TEST_CASE("table 1 layout and totals") {
  const FixtureGrid& g = table1_grid();
  CHECK(g.rows.size() == 24);
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    CHECK(g.rows[i].size == static_cast<int>(i) + 1);
    CHECK(g.rows[i].counts.size() == g.columns.size());
  }
  const CountTable t = table1_fixture();
  CHECK(t.total() == 314'248'344);
  CHECK(t.row_total(1) == 1);
  CHECK(t.row_total(2) == 7);
  CHECK(t.row_total(3) == 39);
  CHECK(t.row_total(4) == 436);
  CHECK(t.row(24) == std::vector<std::pair<int, std::uint64_t>>{{576, 1}});
  CHECK(t.get(2, 240) == 1);
}

TEST_CASE("every published stabilizer order divides the group order") {
  const CountTable t = table1_fixture();
  CHECK(labeled_count_check(t, 1) == 120);
  CHECK(labeled_count_check(t, 2) == 6420);
  CHECK(labeled_count_check(t, 24) == 25);
  for (int size = 1; size <= 24; ++size) CHECK_NOTHROW(labeled_count_check(t, size));
}

TEST_CASE("table 2 is a sub-table of table 1") {
  const FixtureGrid& g = table2_grid();
  CHECK(g.rows.front().size == 10);
  CHECK(g.rows.back().size == 24);
  const CountTable all = table1_fixture(), maximal = table2_fixture();
  for (const auto& [key, n] : maximal.cells()) CHECK(n <= all.get(key.first, key.second));
  CHECK(maximal.row(10) == std::vector<std::pair<int, std::uint64_t>>{{100, 1}});
  CHECK(maximal.row_total(23) == 0);
  CHECK(maximal.row(24) == std::vector<std::pair<int, std::uint64_t>>{{576, 1}});
  CHECK(maximal.restricted(1, 9).empty());
}

TEST_CASE("table 3 rows") {
  const auto& rows = table3_fixture();
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) {
    int vertices = 0;
    for (const auto& o : r.orbits) vertices += o.size;
    CHECK(vertices == 120 - r.size);
    CHECK(table1_fixture().get(r.size, r.stab_order) >= 1);
  }
}
