#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cut600/classify.hpp"
#include "cut600/count_table.hpp"
#include "cut600/enumerate.hpp"
#include "cut600/fixtures.hpp"
#include "cut600/oracle.hpp"
#include "cut600/tables.hpp"

using namespace cut600;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailed = 1;  // a verified fact did not hold
constexpr int kUsage = 2;
constexpr int kCheckpoint = 3;  // checkpoint mismatch or unreadable
constexpr int kBudget = 4;      // stopped by the time budget; checkpoint kept

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "90", "90s", "15m", "48h"
double parse_duration(const std::string& text) {
  if (text.empty()) throw UsageError("empty duration");
  double scale = 1;
  std::string number = text;
  switch (text.back()) {
    case 's': number.pop_back(); break;
    case 'm': scale = 60; number.pop_back(); break;
    case 'h': scale = 3600; number.pop_back(); break;
    default: break;
  }
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(number, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != number.size() || value <= 0) throw UsageError("bad duration: " + text);
  return value * scale;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string csv_of(const CountTable& table) {
  std::ostringstream os;
  table.write_csv(os);
  return os.str();
}

void print_diff(const std::vector<std::string>& diff) {
  if (diff.empty()) {
    std::cout << "diff: none\n";
    return;
  }
  std::cout << "diff: " << diff.size() << " cell(s)\n";
  for (const auto& line : diff) std::cout << "  " << line << '\n';
}

// verify-model ---------------------------------------------------------------

struct VerifyArgs {
  std::string export_path;
  bool corrupt = false;
};

int cmd_verify_model(const VerifyArgs& args) {
  Model model = Model::build();
  if (args.corrupt) {
    const int v = model.neighbors(0).lowest();
    model.corrupt_remove_edge(0, v);
  }
  const auto problems = verify_model(model);
  if (!problems.empty()) {
    std::cerr << "model invariant violated: " << problems.front() << '\n';
    return kFailed;
  }
  std::cout << "vertices=" << model.vertices().size() << " edges=" << model.edges().size()
            << " cells=" << model.cells().size() << " group=" << model.group_size() << '\n';
  if (!args.export_path.empty()) {
    std::ostringstream os;
    model.export_text(os);
    write_output(args.export_path, os.str());
  }
  return kOk;
}

// enumerate --------------------------------------------------------------------

struct EnumerateArgs {
  int min_size = 1;
  int max_size = kMaxCutSize;
  bool maximal_only = false;
  std::string checkpoint;
  bool resume = false;
  int workers = 1;
  std::string out;
  std::string budget;
  bool progress = false;
};

RunOptions run_options(int workers, const std::string& checkpoint, const std::string& budget, bool progress) {
  RunOptions options;
  options.workers = workers;
  options.checkpoint_path = checkpoint;
  if (!budget.empty()) options.time_budget_seconds = parse_duration(budget);
  options.progress = progress;
  return options;
}

// Starts or continues a run. A checkpoint that exists is resumed, and must
// have been written for the same configuration.
EnumResult run_enumeration(const Model& model, const EnumConfig& config, const RunOptions& options, bool resume) {
  if (resume && !std::filesystem::exists(options.checkpoint_path))
    throw CheckpointError("no checkpoint at " + options.checkpoint_path);
  if (resume) return cut600::resume(model, options, {}, config);
  return enumerate_cuts(model, config, options);
}

int report_incomplete(const EnumResult& result, const RunOptions& options) {
  std::cerr << "stopped after " << result.units_done << " of " << result.units_total << " work units";
  if (!options.checkpoint_path.empty()) std::cerr << "; resume from " << options.checkpoint_path;
  std::cerr << '\n';
  return kBudget;
}

int cmd_enumerate(const EnumerateArgs& args) {
  if (args.resume && args.checkpoint.empty()) throw UsageError("--resume needs --checkpoint");
  EnumConfig config;
  config.min_size = args.min_size;
  config.max_size = args.max_size;
  config.maximal_only = args.maximal_only;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Model model = Model::build();
  const RunOptions options = run_options(args.workers, args.checkpoint, args.budget, args.progress);
  const EnumResult result = run_enumeration(model, config, options, args.resume);
  if (!result.complete) return report_incomplete(result, options);
  write_output(args.out, csv_of(result.counts));
  return kOk;
}

// check ------------------------------------------------------------------------

struct CheckArgs {
  int kmax = 4;
  bool inject_fault = false;
};

int cmd_check(const CheckArgs& args) {
  if (args.kmax < 1 || args.kmax > kOracleMaxSize)
    throw UsageError("--kmax must be between 1 and " + std::to_string(kOracleMaxSize));
  const Model model = Model::build();

  EnumConfig config;
  config.max_size = args.kmax;
  CountTable engine = enumerate_cuts(model, config).counts;
  if (args.inject_fault) {
    const auto [size, stab] = engine.cells().rbegin()->first;
    engine.add(size, stab, 1);
  }
  const OrbitLedger ledger = brute_force_orbits(model, args.kmax);
  const CountTable fixture = table1_fixture().restricted(1, args.kmax);

  for (int k = 1; k <= args.kmax; ++k) {
    std::cout << "size " << k << ": engine " << engine.row_total(k) << ", oracle " << ledger.table().row_total(k)
              << ", fixture " << fixture.row_total(k) << ", labeled " << ledger.labeled[k] << '\n';
  }
  const Agreement agreement = agree(ledger, engine);
  std::cout << "engine vs oracle: " << (agreement.agree ? "agree" : "DISAGREE") << '\n';
  for (const auto& line : agreement.diff) std::cout << "  " << line << '\n';

  const auto fixture_diff = diff_tables(fixture, engine, "fixture", "engine");
  std::cout << "engine vs fixture: " << (fixture_diff.empty() ? "match" : "MISMATCH") << '\n';
  for (const auto& line : fixture_diff) std::cout << "  " << line << '\n';
  return agreement.agree && fixture_diff.empty() ? kOk : kFailed;
}

// classify -----------------------------------------------------------------------

struct ClassifyArgs {
  std::string cut;
  std::string named;
};

int cmd_classify(const ClassifyArgs& args) {
  const Model model = Model::build();
  Cut cut;
  if (!args.named.empty()) {
    try {
      cut = named_cut(model, args.named);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    try {
      cut = Cut::parse(args.cut);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const CutReport report = classify_cut(model, cut);
  std::cout << report.to_json() << '\n' << report.table();
  return kOk;
}

// tables -------------------------------------------------------------------------

struct TablesArgs {
  int which = 0;
  std::string budget;
  std::string checkpoint;
  std::optional<int> max_size;
  int workers = 1;
  std::string out;
  bool progress = false;
};

int cmd_tables(const TablesArgs& args) {
  const Model model = Model::build();

  if (args.which == 3) {
    const Table3Regeneration regen = regenerate_table3(model);
    std::vector<Table3Row> rows;
    std::ostringstream os;
    os << CutReport::csv_header() << '\n';
    for (const auto& report : regen.reports) {
      rows.push_back(table3_row(report));
      os << format_table3_row(rows.back()) << '\n';
    }
    write_output(args.out, os.str());
    for (const auto& note : regen.notes) std::cout << "note: " << note << '\n';
    const auto diff = diff_table3(table3_fixture(), rows);
    print_diff(diff);
    return diff.empty() && regen.notes.empty() ? kOk : kFailed;
  }

  // Tables 1 and 2 come out of the same run, so they share checkpoints.
  EnumConfig config;
  if (args.max_size) {
    config.max_size = *args.max_size;
  } else if (args.budget.empty()) {
    throw UsageError("full regeneration of table " + std::to_string(args.which) +
                     " is a long run; pass --regen-budget (e.g. 48h) or a partial --max-size");
  }
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const RunOptions options = run_options(args.workers, args.checkpoint, args.budget, args.progress);
  const bool resume = !args.checkpoint.empty() && std::filesystem::exists(args.checkpoint);
  const EnumResult result = run_enumeration(model, config, options, resume);
  if (!result.complete) return report_incomplete(result, options);

  const CountTable& actual = args.which == 1 ? result.counts : result.maximal;
  const CountTable expected =
      (args.which == 1 ? table1_fixture() : table2_fixture()).restricted(config.min_size, config.max_size);
  write_output(args.out, csv_of(actual));
  std::cout << "rows " << config.min_size << ".." << config.max_size << ", grand total " << actual.total() << '\n';
  const auto diff = diff_tables(expected, actual, "fixture", "regenerated");
  print_diff(diff);
  return diff.empty() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independent sets of the 600-cell skeleton up to symmetry"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-model", "Build the model and check its invariants");
  verify_cmd->add_option("--export", verify.export_path, "Write vertices, edges, cells and group to a file ('-' for stdout)");
  verify_cmd->add_flag("--corrupt-edge", verify.corrupt)->group("");  // test hook

  EnumerateArgs en;
  auto* en_cmd = app.add_subcommand("enumerate", "Count cut orbits by size and stabilizer order (CSV)");
  en_cmd->add_option("--min-size", en.min_size)->check(CLI::Range(0, kMaxCutSize));
  en_cmd->add_option("--max-size", en.max_size)->check(CLI::Range(0, kMaxCutSize));
  en_cmd->add_flag("--maximal-only", en.maximal_only, "Count only maximal cuts");
  en_cmd->add_option("--checkpoint", en.checkpoint, "Checkpoint file, written periodically");
  en_cmd->add_flag("--resume", en.resume, "Continue from --checkpoint");
  en_cmd->add_option("--workers", en.workers)->check(CLI::Range(1, 1024));
  en_cmd->add_option("--out", en.out, "CSV destination (default stdout)");
  en_cmd->add_option("--time-budget", en.budget, "Stop cleanly after this long, e.g. 90m");
  en_cmd->add_flag("--progress", en.progress, "Progress on stderr");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Compare the engine with the brute-force oracle and the fixture");
  check_cmd->add_option("--kmax", check.kmax, "Largest cut size (at most 5)");
  check_cmd->add_flag("--inject-fault", check.inject_fault)->group("");  // test hook

  ClassifyArgs cl;
  auto* cl_cmd = app.add_subcommand("classify", "Report on one cut");
  auto* cut_opt = cl_cmd->add_option("--cut", cl.cut, "Comma-separated vertex indices");
  auto* named_opt = cl_cmd->add_option("--named", cl.named, "snub24, cross8, cross16 or antiprism10");
  cut_opt->excludes(named_opt);
  cl_cmd->require_option(1);

  TablesArgs tb;
  auto* tb_cmd = app.add_subcommand("tables", "Regenerate a published table and diff it against the fixture");
  tb_cmd->add_option("--which", tb.which)->required()->check(CLI::IsMember({1, 2, 3}));
  tb_cmd->add_option("--regen-budget", tb.budget, "Allow the full run for this long, e.g. 48h");
  tb_cmd->add_option("--checkpoint", tb.checkpoint, "Checkpoint file; resumed when it exists");
  tb_cmd->add_option("--max-size", tb.max_size, "Regenerate rows up to this size only")
      ->check(CLI::Range(1, kMaxCutSize));
  tb_cmd->add_option("--workers", tb.workers)->check(CLI::Range(1, 1024));
  tb_cmd->add_option("--out", tb.out, "Regenerated table destination (default stdout)");
  tb_cmd->add_flag("--progress", tb.progress, "Progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify_model(verify);
    if (*en_cmd) return cmd_enumerate(en);
    if (*check_cmd) return cmd_check(check);
    if (*cl_cmd) return cmd_classify(cl);
    if (*tb_cmd) return cmd_tables(tb);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const CheckpointMismatch& e) {
    std::cerr << "checkpoint mismatch: " << e.what() << '\n';
    return kCheckpoint;
  } catch (const CheckpointError& e) {
    std::cerr << "checkpoint error: " << e.what() << '\n';
    return kCheckpoint;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
