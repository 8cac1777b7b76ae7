#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <set>

#include "cut600/classify.hpp"
#include "cut600/enumerate.hpp"
#include "cut600/fixtures.hpp"
#include "cut600/independence.hpp"
#include "cut600/symmetric.hpp"
#include "cut600/tables.hpp"
#include "support.hpp"

using namespace cut600;
using test_support::model;

namespace {

int common_neighbors_within(int v, int a, int b) {
  return (model().neighbors(v) & model().neighbors(a) & model().neighbors(b)).count();
}

std::multiset<std::tuple<int, std::string, int, std::string>> profile(const Cut& cut) {
  std::multiset<std::tuple<int, std::string, int, std::string>> out;
  for (const auto& o : vertex_orbit_profile(model(), cut))
    out.emplace(o.size, o.type.label(), o.stabilizer_order, o.point_group);
  return out;
}

}  // namespace

TEST_CASE("local types from the vertex figure") {
  const Model& m = model();
  const int v = 0;
  const auto nbrs = m.neighbors(v).members();
  CHECK(local_type(m, v, Cut{}).label() == "I");
  CHECK(local_type(m, v, Cut({nbrs[0]})).label() == "II");
  CHECK_THROWS_AS(local_type(m, v, Cut({v})), std::invalid_argument);

  // In the icosahedral vertex figure a non-adjacent pair is antipodal iff it
  // has no common neighbour there; other non-adjacent pairs have two.
  int antipodal = 0, other = 0;
  for (int a : nbrs)
    for (int b : nbrs) {
      if (a >= b || m.adjacent(a, b)) continue;
      const LocalType t = local_type(m, v, Cut({a, b}));
      CHECK(t.k == 2);
      const int common = common_neighbors_within(v, a, b);
      CHECK((common == 0 || common == 2));
      CHECK(t.antipodal == (common == 0));
      CHECK(t.label() == (common == 0 ? "III" : "IV"));
      (t.antipodal ? antipodal : other)++;
    }
  CHECK(antipodal == 6);
  CHECK(other == 30);

  int triples = 0;
  for (int a : nbrs)
    for (int b : nbrs)
      for (int c : nbrs) {
        if (!(a < b && b < c) || m.adjacent(a, b) || m.adjacent(a, c) || m.adjacent(b, c)) continue;
        CHECK(local_type(m, v, Cut({a, b, c})).label() == "V");
        ++triples;
      }
  CHECK(triples == 20);
}

TEST_CASE("the whole group acts on a vertex figure as Ih") {
  const auto p = vertex_orbit_profile(model(), Cut{});
  REQUIRE(p.size() == 1);
  CHECK(p[0].size == 120);
  CHECK(p[0].stabilizer_order == 120);
  CHECK(p[0].point_group == "Ih");
}

TEST_CASE("point groups of familiar subgroups") {
  const Model& m = model();
  // Stabilizer of vertex 0 and one neighbour: the mirror group of an edge.
  const int w = m.neighbors(0).lowest();
  std::vector<int> edge_stab;
  for (int g : stabilizer(m, Cut{}))
    if (m.perm(g)[0] == 0 && m.perm(g)[w] == w) edge_stab.push_back(g);
  CHECK(edge_stab.size() == 10);
  CHECK(point_group_label(m, edge_stab) == "C5v");
  CHECK(point_group_label(m, std::vector<int>{m.identity()}) == "C1");
}

TEST_CASE("snub 24-cell") {
  const Model& m = model();
  const Cut snub = named_cut(m, "snub24");
  CHECK(snub.size() == 24);
  const CutReport r = classify_cut(m, snub);
  CHECK(r.stabilizer_order == 576);
  CHECK(r.maximal);
  CHECK_FALSE(r.simplex_graph_connected);
  REQUIRE(r.vertex_orbits.size() == 1);
  CHECK(r.vertex_orbits[0].size == 96);
  CHECK(r.vertex_orbits[0].type.label() == "V");
  CHECK(r.vertex_orbits[0].stabilizer_order == 6);
  CHECK(r.vertex_orbits[0].point_group == "C3v");

  const auto orbits = cell_orbits(m, snub);
  REQUIRE(orbits.size() == 2);
  std::vector<std::size_t> sizes{orbits[0].size(), orbits[1].size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{24, 96});
  CHECK(orbits[0].size() + orbits[1].size() == 120);

  const auto& small = orbits[0].size() == 24 ? orbits[0] : orbits[1];
  const std::set<int> small_set(small.begin(), small.end());
  const SimplexGraph g = simplex_graph(m, snub);
  for (std::size_t i = 0; i < g.cells.size(); ++i) {
    if (!small_set.count(g.cells[i])) continue;
    for (int j : g.neighbors[i]) CHECK_FALSE(small_set.count(g.cells[j]));
  }
}

TEST_CASE("grand antiprism cut") {
  const CutReport r = classify_cut(model(), named_cut(model(), "antiprism10"));
  CHECK(r.size == 10);
  CHECK(r.stabilizer_order == 100);
  CHECK(r.maximal);
  CHECK(r.simplex_graph_connected);
  CHECK(profile(r.cut) == std::multiset<std::tuple<int, std::string, int, std::string>>{
                              {100, "II", 1, "C1"}, {10, "III", 10, "D5"}});
}

TEST_CASE("cross-polytope cuts") {
  for (const std::string name : {"cross8", "cross16"}) {
    const CutReport r = classify_cut(model(), named_cut(model(), name));
    CHECK(r.stabilizer_order == 192);
    CHECK_FALSE(r.maximal);
    CHECK(r.simplex_graph_connected);
  }
  CHECK(named_cut(model(), "cross8").size() == 8);
  CHECK(named_cut(model(), "cross16").size() == 16);
  CHECK_THROWS_AS(named_cut(model(), "nonesuch"), std::invalid_argument);
}

TEST_CASE("maximality") {
  const Model& m = model();
  CHECK(is_maximal(m, named_cut(m, "snub24")));
  CHECK_FALSE(is_maximal(m, Cut({0})));
  CHECK_FALSE(is_maximal(m, Cut{}));
}

TEST_CASE("classification rejects dependent sets") {
  const int w = model().neighbors(0).lowest();
  const std::string pair = std::to_string(w);
  CHECK_THROWS_WITH_AS(classify_cut(model(), Cut({0, w})), doctest::Contains(pair.c_str()), std::invalid_argument);
}

TEST_CASE("report serialisation") {
  const CutReport r = classify_cut(model(), named_cut(model(), "snub24"));
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["size"] == 24);
  CHECK(j["stab_order"] == 576);
  CHECK(j["maximal"] == true);
  CHECK(j["connected"] == false);
  CHECK(j["cut"].size() == 24);
  REQUIRE(j["vertex_orbits"].size() == 1);
  CHECK(j["vertex_orbits"][0]["type"] == "V");
  CHECK(j["vertex_orbits"][0]["point_group"] == "C3v");
  CHECK(r.csv_row() == "24,576,yes,no,(96 V C3v)");
  CHECK(CutReport::csv_header() == "size,stab_order,maximal,connected,vertex_orbits");
  CHECK(r.table().find("C3v") != std::string::npos);
}

TEST_CASE("the group has 34 conjugacy classes") {
  const auto classes = conjugacy_classes(model());
  CHECK(classes.size() == 34);
  CHECK(classes.front() == std::vector<int>{model().identity()});
  std::size_t total = 0;
  for (const auto& c : classes) {
    total += c.size();
    CHECK(14400 % c.size() == 0);
    const int order = model().element_order(c.front());
    for (int g : c) CHECK(model().element_order(g) == order);
  }
  CHECK(total == 14400);
}

TEST_CASE("symmetric search agrees with the enumeration on small cuts") {
  const CountTable counts = enumerate_cuts(model(), [] {
                              EnumConfig c;
                              c.max_size = 6;
                              return c;
                            }()).counts;
  int checked = 0;
  for (const auto& [key, n] : counts.cells()) {
    const auto [size, stab] = key;
    // Involution-only stabilizers give huge candidate lists; skip those here.
    if (stab % 3 != 0 && stab % 5 != 0) continue;
    CHECK_MESSAGE(find_cuts_with_symmetry(model(), size, stab).size() == n, "size " << size << " stab " << stab);
    ++checked;
  }
  CHECK(checked > 20);
  CHECK_THROWS_AS(find_cuts_with_symmetry(model(), 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(find_cuts_with_symmetry(model(), 4, 7), std::invalid_argument);
}

TEST_CASE("no independent set has 25 vertices, and the 24-vertex ones form one orbit") {
  const Model& m = model();
  CHECK(independent_sets_through_zero(m, 25).empty());
  const auto sets = independent_sets_through_zero(m, 24);
  std::set<Cut> orbits;
  for (const Cut& c : sets) {
    CHECK(c[0] == 0);
    CHECK(is_independent(m, c));
    orbits.insert(min_image(m, c));
  }
  REQUIRE(orbits.size() == 1);
  CHECK(*orbits.begin() == min_image(m, named_cut(m, "snub24")));
  CHECK(stabilizer(m, *orbits.begin()).size() == 576);
  // 120 * (sets through a vertex) / 24 labeled sets = 14400 / 576.
  CHECK(120 * sets.size() / 24 == 25);
  CHECK(independence_number(m) == 24);
}

TEST_CASE("branch and bound counts small independent sets exactly") {
  const Model& m = model();
  // Through vertex 0: size 2 means any non-neighbour.
  CHECK(independent_sets_through_zero(m, 2).size() == 120 - 13);
  std::uint64_t triples = 0;
  for (int a = 1; a < 120; ++a)
    for (int b = a + 1; b < 120; ++b)
      triples += !m.adjacent(0, a) && !m.adjacent(0, b) && !m.adjacent(a, b);
  CHECK(independent_sets_through_zero(m, 3).size() == triples);
}

TEST_CASE("highly symmetric cuts are reproduced") {
  const Table3Regeneration regen = regenerate_table3(model());
  CHECK(regen.notes.empty());
  std::vector<Table3Row> rows;
  for (const auto& r : regen.reports) rows.push_back(table3_row(r));
  CHECK(rows.size() == table3_fixture().size());
  CHECK(diff_table3(table3_fixture(), rows).empty());

  std::vector<Table3Row> broken = rows;
  broken[0].maximal = !broken[0].maximal;
  CHECK(diff_table3(table3_fixture(), broken).size() == 2);
}
