#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cut600/enumerate.hpp"
#include "cut600/fixtures.hpp"
#include "cut600/oracle.hpp"
#include "support.hpp"

using namespace cut600;
using test_support::model;

namespace {

CountTable engine_counts(int max_size) {
  EnumConfig config;
  config.max_size = max_size;
  return enumerate_cuts(model(), config).counts;
}

}  // namespace

TEST_CASE("brute force finds the small orbits") {
  const OrbitLedger ledger = brute_force_orbits(model(), 3);
  CHECK(ledger.labeled[1] == 120);
  CHECK(ledger.labeled[2] == 6420);
  CHECK(ledger.labeled[3] == 202600);
  CHECK(ledger.table() == table1_fixture().restricted(1, 3));
  for (int k = 1; k <= 3; ++k) {
    std::uint64_t labeled = 0;
    for (const auto& [rep, stab] : ledger.representatives[k]) {
      CHECK(rep.size() == k);
      CHECK(is_lex_min(model(), rep));
      labeled += 14400 / stab;
    }
    CHECK(labeled == ledger.labeled[k]);
  }
}

TEST_CASE("engine and brute force agree up to size 3") {
  const Agreement a = agree(brute_force_orbits(model(), 3), engine_counts(3));
  CHECK(a.agree);
  CHECK(a.diff.empty());
}

TEST_CASE("agreement reports a single changed cell") {
  const OrbitLedger ledger = brute_force_orbits(model(), 2);
  CountTable off = engine_counts(2);
  off.add(2, 8, 1);
  const Agreement a = agree(ledger, off);
  CHECK_FALSE(a.agree);
  REQUIRE(a.diff.size() == 1);
  CHECK(a.diff[0].find("2") != std::string::npos);
}

TEST_CASE("oracle size guard") {
  CHECK_THROWS_AS(brute_force_orbits(model(), 6), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_orbits(model(), -1), std::invalid_argument);
  CHECK(brute_force_orbits(model(), 0).table().empty());
}
