#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "cut600/model.hpp"
#include "support.hpp"

using namespace cut600;
using test_support::model;

namespace {

std::array<double, 4> unit_coords(const Quat& v) {
  return {v.w.approx() / 2, v.x.approx() / 2, v.y.approx() / 2, v.z.approx() / 2};
}

double distance(const Quat& u, const Quat& v) {
  const auto a = unit_coords(u), b = unit_coords(v);
  double s = 0;
  for (int i = 0; i < 4; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("counts of the skeleton") {
  const Model& m = model();
  CHECK(m.vertices().size() == 120);
  CHECK(m.edges().size() == 720);
  CHECK(count_triangles(m) == 1200);
  CHECK(m.cells().size() == 600);
  for (int v = 0; v < 120; ++v) {
    CHECK(m.neighbors(v).count() == 12);
    CHECK(m.cells_of(v).size() == 20);
  }
  CHECK(verify_model(m).empty());
}

TEST_CASE("edges are exactly the pairs at distance 1/phi on the unit sphere") {
  // Floating-point recomputation, independent of the exact inner product test.
  const Model& m = model();
  const double edge = 2 / (1 + std::sqrt(5.0));
  int pairs = 0;
  for (int u = 0; u < 120; ++u)
    for (int v = u + 1; v < 120; ++v) {
      const bool close = std::abs(distance(m.vertex(u), m.vertex(v)) - edge) < 1e-9;
      pairs += close;
      CHECK(close == m.adjacent(u, v));
    }
  CHECK(pairs == 720);
}

TEST_CASE("vertex order starts at (-1,0,0,0) and is sorted") {
  const Model& m = model();
  CHECK(m.vertex(0) == Quat{GoldenInt{-2, 0}, {}, {}, {}});
  for (int v = 1; v < 120; ++v) CHECK(m.vertex(v - 1) < m.vertex(v));
  for (int v = 0; v < 120; ++v) CHECK(m.index_of(m.vertex(v)) == v);
  CHECK(m.index_of(Quat{GoldenInt{1, 0}, {}, {}, {}}) == -1);
}

TEST_CASE("antipodes are at distance 2 and never adjacent") {
  const Model& m = model();
  for (int v = 0; v < 120; ++v) {
    const int a = m.antipode(v);
    CHECK(m.vertex(a) == -m.vertex(v));
    CHECK(m.antipode(a) == v);
    CHECK_FALSE(m.adjacent(v, a));
    CHECK(inner4(m.vertex(v), m.vertex(a)) == GoldenInt{-4, 0});
  }
}

TEST_CASE("cells are 4-cliques and every triangle lies in exactly two cells") {
  const Model& m = model();
  std::map<std::array<int, 3>, int> triangle_cells;
  for (const auto& c : m.cells()) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) CHECK(m.adjacent(c[i], c[j]));
    for (int skip = 0; skip < 4; ++skip) {
      std::array<int, 3> t{};
      int n = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) t[n++] = c[i];
      ++triangle_cells[t];
    }
  }
  CHECK(triangle_cells.size() == 1200);
  for (const auto& [t, n] : triangle_cells) CHECK(n == 2);
}

TEST_CASE("the group has 14,400 distinct adjacency-preserving permutations") {
  const Model& m = model();
  REQUIRE(m.group_size() == 14400);
  CHECK(m.identity() == 0);
  std::set<Perm> distinct;
  int proper = 0;
  for (int g = 0; g < m.group_size(); ++g) {
    const Perm& p = m.perm(g);
    distinct.insert(p);
    for (const auto& [u, v] : m.edges()) CHECK(m.adjacent(p[u], p[v]));
    const GoldenInt det = determinant(m.element_matrix(g));
    CHECK(det == GoldenInt{m.group()[g].conjugating ? -16 : 16, 0});
    proper += !m.group()[g].conjugating;
  }
  CHECK(distinct.size() == 14400);
  CHECK(proper == 7200);
}

TEST_CASE("group operations are consistent") {
  const Model& m = model();
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, m.group_size() - 1);
  for (int n = 0; n < 500; ++n) {
    const int g = pick(rng), h = pick(rng), k = pick(rng);
    const int gh = m.compose(g, h);
    REQUIRE(gh >= 0);
    for (int x = 0; x < 120; ++x) CHECK(m.perm(gh)[x] == m.perm(g)[m.perm(h)[x]]);
    CHECK(m.compose(m.compose(g, h), k) == m.compose(g, m.compose(h, k)));
    CHECK(m.compose(g, m.inverse(g)) == m.identity());
    CHECK(m.perm(g)[m.zero_preimages()[g]] == 0);
    const int order = m.element_order(g);
    CHECK(14400 % order == 0);
  }
}

TEST_CASE("elements act linearly through their matrices") {
  const Model& m = model();
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(0, m.group_size() - 1);
  for (int n = 0; n < 200; ++n) {
    const int g = pick(rng);
    const GoldenMatrix4 a = m.element_matrix(g);
    for (int v = 0; v < 120; ++v) {
      const Quat& x = m.vertex(v);
      Quat y;
      for (int r = 0; r < 4; ++r) {
        GoldenInt s;
        for (int c = 0; c < 4; ++c) s += a[r][c] * x[c];
        y[r] = halve(s);
      }
      CHECK(m.index_of(y) == m.perm(g)[v]);
    }
  }
}

TEST_CASE("construction is deterministic") {
  const Model other = Model::build();
  CHECK(other.fingerprint() == model().fingerprint());
  std::ostringstream a, b;
  model().export_text(a);
  other.export_text(b);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("vertex 0 ") != std::string::npos);
}

TEST_CASE("a relabeled model is isomorphic but fingerprinted differently") {
  std::vector<int> order(120);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(9);
  std::shuffle(order.begin(), order.end(), rng);
  const Model r = model().relabeled(order);
  CHECK(verify_model(r).empty());
  CHECK(r.fingerprint() != model().fingerprint());
  for (int u = 0; u < 120; ++u)
    for (int v = 0; v < 120; ++v) CHECK(r.adjacent(u, v) == model().adjacent(order[u], order[v]));
}

TEST_CASE("a corrupted model fails verification") {
  Model broken = Model::build();
  broken.corrupt_remove_edge(0, broken.neighbors(0).lowest());
  CHECK_FALSE(verify_model(broken).empty());
}

TEST_CASE("the skeleton has no automorphisms beyond the group") {
  CHECK(count_graph_automorphisms(model()) == 14400);
}
