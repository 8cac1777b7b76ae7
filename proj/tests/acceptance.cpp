// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Criterion 8 (full regeneration) runs only with
// --long; pass --checkpoint to make it resumable.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>

#include "cut600/classify.hpp"
#include "cut600/enumerate.hpp"
#include "cut600/fixtures.hpp"
#include "cut600/independence.hpp"
#include "cut600/oracle.hpp"

using namespace cut600;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

EnumConfig up_to(int max_size) {
  EnumConfig config;
  config.max_size = max_size;
  return config;
}

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += (out.empty() ? "" : "; ") + l;
  return out;
}

void model_facts(const Model& m, Outcome& o) {
  const Model fresh = Model::build();
  o.expect(fresh.fingerprint() == m.fingerprint(), "deterministic build");
  o.expect(fresh.vertices().size() == 120, "120 vertices");
  o.expect(fresh.edges().size() == 720, "720 edges");
  o.expect(count_triangles(fresh) == 1200, "1200 triangles");
  o.expect(fresh.cells().size() == 600, "600 cells");
  bool degrees = true;
  for (int v = 0; v < 120; ++v)
    degrees = degrees && fresh.neighbors(v).count() == 12 && fresh.cells_of(v).size() == 20;
  o.expect(degrees, "degree 12 and 20 cells per vertex");
  o.expect(fresh.group_size() == 14400, "14400 group elements");
  const auto problems = verify_model(fresh);
  o.expect(problems.empty(), problems.empty() ? "" : problems.front());
  o.detail << "vertices=" << fresh.vertices().size() << " edges=" << fresh.edges().size()
           << " triangles=" << count_triangles(fresh) << " cells=" << fresh.cells().size()
           << " group=" << fresh.group_size();
}

void dual_method(const Model& m, Outcome& o) {
  const CountTable engine = enumerate_cuts(m, up_to(4)).counts;
  const OrbitLedger ledger = brute_force_orbits(m, 4);
  const Agreement a = agree(ledger, engine);
  o.expect(a.agree, "engine vs oracle: " + join(a.diff));
  const auto diff = diff_tables(table1_fixture().restricted(1, 4), engine, "fixture", "engine");
  o.expect(diff.empty(), "engine vs fixture: " + join(diff));
  o.expect(engine.row(2) == std::vector<std::pair<int, std::uint64_t>>{{8, 1}, {12, 2}, {20, 3}, {240, 1}},
           "row 2 = {8:1, 12:2, 20:3, 240:1}");
  o.detail << "row totals";
  for (int k = 1; k <= 4; ++k) o.detail << ' ' << engine.row_total(k);
  o.detail << ", oracle labeled";
  for (int k = 1; k <= 4; ++k) o.detail << ' ' << ledger.labeled[k];
}

void labeled_count(const Model& m, Outcome& o) {
  const CountTable t = enumerate_cuts(m, up_to(2)).counts;
  std::uint64_t pairs = 0;
  for (int u = 0; u < 120; ++u)
    for (int v = u + 1; v < 120; ++v) pairs += !m.adjacent(u, v);
  const std::uint64_t labeled = labeled_count_check(t, 2);
  o.expect(labeled == pairs, "sum 14400/|stab| equals non-adjacent pairs");
  o.expect(pairs == 120 * 119 / 2 - 720, "C(120,2) - 720");
  o.expect(labeled == 6420, "6420");
  o.detail << "sum 14400/|stab| = " << labeled << ", non-adjacent pairs = " << pairs;
}

void desk_rows(const Model& m, Outcome& o) {
  const CountTable t = enumerate_cuts(m, up_to(6)).counts;
  const auto diff = diff_tables(table1_fixture().restricted(1, 6), t, "fixture", "engine");
  o.expect(diff.empty(), join(diff));
  o.detail << "row totals";
  for (int k = 1; k <= 6; ++k) o.detail << ' ' << t.row_total(k);
}

void named_cuts(const Model& m, Outcome& o) {
  const Cut snub = named_cut(m, "snub24");
  const CutReport s = classify_cut(m, snub);
  o.expect(s.stabilizer_order == 576 && s.maximal && !s.simplex_graph_connected, "snub24 576/maximal/disconnected");
  o.expect(s.vertex_orbits.size() == 1 && s.vertex_orbits[0].size == 96 && s.vertex_orbits[0].type.label() == "V" &&
               s.vertex_orbits[0].stabilizer_order == 6,
           "snub24 orbit (96, V, 6)");

  const auto cells = cell_orbits(m, snub);
  bool split = cells.size() == 2 && cells[0].size() + cells[1].size() == 120 &&
               (cells[0].size() == 24 || cells[1].size() == 24);
  o.expect(split, "surviving cells split 24 + 96");
  if (split) {
    const auto& small = cells[0].size() == 24 ? cells[0] : cells[1];
    const std::set<int> small_set(small.begin(), small.end());
    const SimplexGraph g = simplex_graph(m, snub);
    bool across = true;
    for (std::size_t i = 0; i < g.cells.size(); ++i)
      if (small_set.count(g.cells[i]))
        for (int j : g.neighbors[i]) across = across && !small_set.count(g.cells[j]);
    o.expect(across, "24-orbit cells adjacent only to 96-orbit cells");
  }

  const CutReport a = classify_cut(m, named_cut(m, "antiprism10"));
  std::multiset<std::tuple<int, std::string, int>> profile;
  for (const auto& v : a.vertex_orbits) profile.emplace(v.size, v.type.label(), v.stabilizer_order);
  o.expect(a.stabilizer_order == 100 && a.maximal, "antiprism10 100/maximal");
  o.expect(profile == std::multiset<std::tuple<int, std::string, int>>{{100, "II", 1}, {10, "III", 10}},
           "antiprism10 profile [(100, II, 1), (10, III, 10)]");

  const auto& t3 = table3_fixture();
  for (const std::string name : {"cross8", "cross16"}) {
    const CutReport c = classify_cut(m, named_cut(m, name));
    bool row_found = false;
    for (const auto& row : t3)
      if (row.size == c.size && row.stab_order == c.stabilizer_order && row.maximal == c.maximal &&
          row.connected == c.simplex_graph_connected)
        row_found = true;
    o.expect(c.stabilizer_order == 192 && !c.maximal && c.simplex_graph_connected, name + " 192/not maximal/connected");
    o.expect(row_found, name + " matches its fixture row");
  }
  o.detail << "snub24 " << s.csv_row() << "; antiprism10 " << a.csv_row();
}

void independence_bound(const Model& m, Outcome& o) {
  const auto above = independent_sets_through_zero(m, 25);
  o.expect(above.empty(), "no independent 25-set");
  std::set<Cut> orbits;
  for (const Cut& c : independent_sets_through_zero(m, 24)) orbits.insert(min_image(m, c));
  const Cut snub = min_image(m, named_cut(m, "snub24"));
  o.expect(orbits.size() == 1 && *orbits.begin() == snub, "exactly one 24-orbit, the snub24 cut");
  o.expect(is_maximal(m, snub), "snub24 admits no extension");
  o.detail << "25-sets: " << above.size() << ", 24-orbits: " << orbits.size();
}

void prefix_closure(const Model& m, Outcome& o) {
  std::vector<Cut> reps;
  enumerate_cuts(m, up_to(4), {}, [&](std::span<const Vertex> cut, int, bool) {
    reps.emplace_back(std::vector<int>(cut.begin(), cut.end()));
  });
  std::size_t prefixes = 0, bad = 0;
  for (const Cut& rep : reps) {
    o.expect(min_image(m, rep) == rep, "representative " + rep.str() + " is its own minimal image");
    for (int len = 1; len <= rep.size(); ++len) {
      ++prefixes;
      if (!is_lex_min(m, Cut(std::vector<int>(rep.begin(), rep.begin() + len)))) ++bad;
    }
  }
  o.expect(bad == 0, std::to_string(bad) + " prefixes not lex-min");
  o.expect(reps.size() == 483, "483 representatives of size <= 4");
  o.detail << reps.size() << " representatives, " << prefixes << " prefixes checked";
}

struct LongOptions {
  std::string checkpoint;
  int workers = 1;
};

void full_regeneration(const Model& m, const LongOptions& opts, Outcome& o) {
  RunOptions run;
  run.checkpoint_path = opts.checkpoint;
  run.workers = opts.workers;
  run.progress = true;
  const bool resumable = !opts.checkpoint.empty() && std::filesystem::exists(opts.checkpoint);
  const EnumResult r = resumable ? resume(m, run, {}, EnumConfig{}) : enumerate_cuts(m, EnumConfig{}, run);
  o.expect(r.complete, "run completed");
  o.expect(r.counts.total() == 314'248'344, "grand total 314,248,344");
  const auto d1 = diff_tables(table1_fixture(), r.counts, "fixture", "regenerated");
  o.expect(d1.empty(), "table 1: " + join(d1));
  const auto d2 = diff_tables(table2_fixture(), r.maximal, "fixture", "regenerated");
  o.expect(d2.empty(), "table 2: " + join(d2));
  o.expect(r.maximal.row(10) == std::vector<std::pair<int, std::uint64_t>>{{100, 1}}, "unique size-10 maximal cut");
  o.expect(r.maximal.row_total(23) == 0, "no size-23 maximal cut");
  o.detail << "grand total " << r.counts.total() << ", maximal " << r.maximal.total() << ", nodes " << r.nodes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  bool run_long = false;
  LongOptions long_opts;
  app.add_flag("--long", run_long, "Also run the full regeneration (hours)");
  app.add_option("--checkpoint", long_opts.checkpoint, "Checkpoint for the full regeneration");
  app.add_option("--workers", long_opts.workers, "Workers for the full regeneration")->check(CLI::Range(1, 1024));
  CLI11_PARSE(app, argc, argv);

  const Model model = Model::build();
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "model facts", 10, [&](Outcome& o) { model_facts(model, o); }},
      {2, "engine and oracle agree up to size 4", 600, [&](Outcome& o) { dual_method(model, o); }},
      {3, "labeled count of size-2 cuts", 1, [&](Outcome& o) { labeled_count(model, o); }},
      {4, "rows 1-6 of the count table", 60, [&](Outcome& o) { desk_rows(model, o); }},
      {5, "named cuts", 60, [&](Outcome& o) { named_cuts(model, o); }},
      {6, "independence bound 24", 600, [&](Outcome& o) { independence_bound(model, o); }},
      {7, "prefix closure up to size 4", 600, [&](Outcome& o) { prefix_closure(model, o); }},
  };

  int failures = 0;
  auto report = [&](int id, const std::string& name, double limit, const std::function<void(Outcome&)>& run) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0) o.expect(seconds < limit, "runtime limit " + std::to_string(static_cast<int>(limit)) + "s");
    failures += !o.pass;
    std::printf("%s %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.str().c_str(),
                seconds);
    std::fflush(stdout);
  };

  for (const auto& c : criteria) report(c.id, c.name, c.limit_seconds, c.run);
  if (run_long)
    report(8, "full regeneration", 0, [&](Outcome& o) { full_regeneration(model, long_opts, o); });
  else
    std::printf("SKIP 8 full regeneration: long run, enable with --long\n");
  return failures == 0 ? 0 : 1;
}
