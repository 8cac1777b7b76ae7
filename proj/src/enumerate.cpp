#include "cut600/enumerate.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace cut600 {

void EnumConfig::validate() const {
  if (min_size < 0 || max_size > kMaxCutSize || min_size > max_size)
    throw std::invalid_argument("need 0 <= min_size <= max_size <= 24");
  if (split_depth < 1 || split_depth > kMaxCutSize) throw std::invalid_argument("split_depth must be in [1, 24]");
  if (checkpoint_interval == 0) throw std::invalid_argument("checkpoint_interval must be positive");
}

std::string EnumConfig::describe() const {
  std::ostringstream os;
  os << "min=" << min_size << " max=" << max_size << " maximal_only=" << (maximal_only ? 1 : 0)
     << " split=" << split_depth << " filter=";
  if (!subtree_filter) {
    os << '-';
  } else {
    for (std::size_t i = 0; i < subtree_filter->size(); ++i) os << (i ? ";" : "") << (*subtree_filter)[i].str();
    if (subtree_filter->empty()) os << ';';
  }
  return os.str();
}

namespace {

EnumConfig parse_config(const std::string& text) {
  EnumConfig cfg;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw CheckpointError("checkpoint: bad config token '" + tok + "'");
    const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
    if (key == "min") {
      cfg.min_size = std::stoi(value);
    } else if (key == "max") {
      cfg.max_size = std::stoi(value);
    } else if (key == "maximal_only") {
      cfg.maximal_only = value == "1";
    } else if (key == "split") {
      cfg.split_depth = std::stoi(value);
    } else if (key == "filter") {
      if (value != "-") {
        std::vector<Cut> prefixes;
        std::size_t pos = 0;
        while (pos < value.size()) {
          auto semi = value.find(';', pos);
          if (semi == std::string::npos) semi = value.size();
          if (semi > pos) prefixes.push_back(Cut::parse(value.substr(pos, semi - pos)));
          pos = semi + 1;
        }
        cfg.subtree_filter = std::move(prefixes);
      }
    } else {
      throw CheckpointError("checkpoint: unknown config key '" + key + "'");
    }
  }
  return cfg;
}

struct Accumulated {
  CountTable counts;
  CountTable maximal;
  std::uint64_t nodes = 0;
  std::vector<char> done;
};

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

// Layout, one record per line:
//   cut600-checkpoint v1
//   fingerprint <16 hex digits>
//   config <EnumConfig::describe()>
//   units <total work units>
//   nodes <nodes so far>
//   done <unit index> ...
//   count <size> <stab> <n>        (repeated)
//   maximal <size> <stab> <n>      (repeated)
//   end
void write_checkpoint(const std::string& path, std::uint64_t fingerprint, const EnumConfig& cfg,
                      const Accumulated& acc) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) throw CheckpointError("cannot open checkpoint file " + tmp);
    os << "cut600-checkpoint v1\n"
       << "fingerprint " << hex64(fingerprint) << '\n'
       << "config " << cfg.describe() << '\n'
       << "units " << acc.done.size() << '\n'
       << "nodes " << acc.nodes << '\n'
       << "done";
    for (std::size_t i = 0; i < acc.done.size(); ++i)
      if (acc.done[i]) os << ' ' << i;
    os << '\n';
    for (const auto& [key, n] : acc.counts.cells()) os << "count " << key.first << ' ' << key.second << ' ' << n << '\n';
    for (const auto& [key, n] : acc.maximal.cells())
      os << "maximal " << key.first << ' ' << key.second << ' ' << n << '\n';
    os << "end\n";
    os.flush();
    if (!os) throw CheckpointError("failed writing checkpoint file " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CheckpointError("cannot move checkpoint into place at " + path + ": " + ec.message());
}

struct LoadedCheckpoint {
  std::uint64_t fingerprint = 0;
  std::string config_text;
  Accumulated acc;
};

LoadedCheckpoint load_checkpoint(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw CheckpointError("cannot open checkpoint " + path);
  LoadedCheckpoint out;
  std::string line;
  if (!std::getline(is, line) || line != "cut600-checkpoint v1") throw CheckpointError("not a cut600 checkpoint: " + path);
  bool ended = false;
  std::size_t units = 0;
  std::vector<std::size_t> done;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "fingerprint") {
      std::string h;
      ls >> h;
      out.fingerprint = std::stoull(h, nullptr, 16);
    } else if (tag == "config") {
      out.config_text = line.substr(7);
    } else if (tag == "units") {
      ls >> units;
    } else if (tag == "nodes") {
      ls >> out.acc.nodes;
    } else if (tag == "done") {
      std::size_t i;
      while (ls >> i) done.push_back(i);
    } else if (tag == "count" || tag == "maximal") {
      int size = 0, stab = 0;
      std::uint64_t n = 0;
      if (!(ls >> size >> stab >> n)) throw CheckpointError("checkpoint: bad count line");
      (tag == "count" ? out.acc.counts : out.acc.maximal).add(size, stab, n);
    } else if (tag == "end") {
      ended = true;
      break;
    } else {
      throw CheckpointError("checkpoint: unknown record '" + tag + "'");
    }
  }
  if (!ended) throw CheckpointError("checkpoint is truncated: " + path);
  out.acc.done.assign(units, 0);
  for (std::size_t i : done) {
    if (i >= units) throw CheckpointError("checkpoint: unit index out of range");
    out.acc.done[i] = 1;
  }
  return out;
}

/// Depth-first orderly search over lex-min independent sets.
class Search {
 public:
  Search(const Model& model, const LexMinTester& tester, const EnumConfig& cfg, const CutVisitor& visitor)
      : model_(model), tester_(tester), cfg_(cfg), visitor_(visitor) {}

  CountTable counts;
  CountTable maximal;
  std::uint64_t nodes = 0;

  /// Walks sizes below the split size, counting them when `count` is set,
  /// and collects the lex-min cuts of the split size as work units. The
  /// split size is split_depth, capped at max_size.
  void prelude(bool count, std::vector<std::vector<Vertex>>& units) {
    counting_ = count;
    units_ = &units;
    node(0, VertexSet{}, VertexSet::all(), VertexSet{}, kGroupOrder);
    units_ = nullptr;
  }

  void run_unit(std::span<const Vertex> unit) {
    counting_ = true;
    const int k = static_cast<int>(unit.size());
    VertexSet bits, covered, cand = VertexSet::above(unit.back());
    for (int i = 0; i < k; ++i) {
      members_[i] = unit[i];
      bits.set(unit[i]);
      covered.set(unit[i]);
      covered |= model_.neighbors(unit[i]);
      cand -= model_.neighbors(unit[i]);
    }
    const auto res = tester_.test(unit, bits);
    if (!res.minimal) throw std::logic_error("work unit is not lex-min");
    node(k, bits, cand, covered, res.stabilizer_order);
  }

 private:
  // Returns {may contain counted cuts below, counted here}.
  std::pair<bool, bool> filter_state(int k) const {
    if (!cfg_.subtree_filter) return {true, true};
    bool compatible = false, inside = false;
    for (const Cut& p : *cfg_.subtree_filter) {
      const int common = std::min(k, p.size());
      bool agree = true;
      for (int i = 0; i < common && agree; ++i) agree = members_[i] == p[i];
      if (!agree) continue;
      compatible = true;
      if (k >= p.size()) inside = true;
    }
    return {compatible, inside};
  }

  void node(int k, const VertexSet& bits, VertexSet cand, const VertexSet& covered, int stab) {
    // Runs shorter than the split depth are still divided, at their last size.
    if (units_ && k == std::max(1, std::min(cfg_.split_depth, cfg_.max_size)) && k <= cfg_.max_size) {
      units_->emplace_back(members_.begin(), members_.begin() + k);
      return;
    }
    if (counting_) {
      ++nodes;
      if (k >= cfg_.min_size && filter_state(k).second) {
        const bool is_maximal = covered == VertexSet::all();
        if (is_maximal) maximal.add(k, stab);
        if (!cfg_.maximal_only || is_maximal) {
          counts.add(k, stab);
          if (visitor_) visitor_(std::span<const Vertex>(members_.data(), k), stab, is_maximal);
        }
      }
    }
    if (k >= cfg_.max_size) return;

    VertexSet next_bits;
    while (!cand.empty()) {
      const int v = cand.pop_lowest();  // cand now holds the candidates above v
      members_[k] = static_cast<Vertex>(v);
      if (!filter_state(k + 1).first) continue;
      next_bits = bits;
      next_bits.set(v);
      const auto res = tester_.test(std::span<const Vertex>(members_.data(), k + 1), next_bits);
      if (!res.minimal) continue;
      VertexSet next_covered = covered | model_.neighbors(v);
      next_covered.set(v);
      node(k + 1, next_bits, cand - model_.neighbors(v), next_covered, res.stabilizer_order);
    }
  }

  const Model& model_;
  const LexMinTester& tester_;
  const EnumConfig& cfg_;
  const CutVisitor& visitor_;
  std::array<Vertex, kMaxCutSize + 1> members_{};
  bool counting_ = true;
  std::vector<std::vector<Vertex>>* units_ = nullptr;
};

EnumResult finish_result(const EnumConfig& cfg, const Accumulated& acc) {
  EnumResult r;
  r.counts = acc.counts;
  r.maximal = acc.maximal;
  r.nodes = acc.nodes;
  r.units_total = acc.done.size();
  for (char d : acc.done) r.units_done += d ? 1 : 0;
  r.complete = r.units_done == r.units_total;
  (void)cfg;
  return r;
}

EnumResult process_units(const Model& model, const LexMinTester& tester, const EnumConfig& cfg,
                         const RunOptions& options, const CutVisitor& visitor,
                         const std::vector<std::vector<Vertex>>& units, Accumulated& acc) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < units.size(); ++i)
    if (!acc.done[i]) pending.push_back(i);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::exception_ptr failure;
  std::uint64_t nodes_since_write = 0;
  std::uint64_t done_this_run = 0;
  auto last_report = start;

  auto out_of_budget = [&] {
    return options.time_budget_seconds &&
           std::chrono::duration<double>(Clock::now() - start).count() >= *options.time_budget_seconds;
  };

  auto worker = [&] {
    try {
      while (!stop.load()) {
        if (out_of_budget()) break;
        const std::size_t slot = next.fetch_add(1);
        if (slot >= pending.size()) break;
        if (options.unit_limit && slot >= *options.unit_limit) break;
        const std::size_t idx = pending[slot];

        Search search(model, tester, cfg, visitor);
        search.run_unit(units[idx]);

        std::lock_guard lock(mu);
        acc.counts.merge(search.counts);
        acc.maximal.merge(search.maximal);
        acc.nodes += search.nodes;
        acc.done[idx] = 1;
        ++done_this_run;
        nodes_since_write += search.nodes;
        if (!options.checkpoint_path.empty() && nodes_since_write >= cfg.checkpoint_interval) {
          write_checkpoint(options.checkpoint_path, model.fingerprint(), cfg, acc);
          nodes_since_write = 0;
        }
        if (options.progress && Clock::now() - last_report > std::chrono::seconds(10)) {
          last_report = Clock::now();
          std::fprintf(stderr, "[enumerate] units %zu/%zu this run, nodes %" PRIu64 ", %.0fs\n",
                       static_cast<std::size_t>(done_this_run), pending.size(), acc.nodes,
                       std::chrono::duration<double>(last_report - start).count());
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  };

  const int n_workers = std::max(1, options.workers);
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < n_workers; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  if (!options.checkpoint_path.empty()) write_checkpoint(options.checkpoint_path, model.fingerprint(), cfg, acc);
  EnumResult r = finish_result(cfg, acc);
  if (options.progress)
    std::fprintf(stderr, "[enumerate] %s: units %" PRIu64 "/%" PRIu64 ", nodes %" PRIu64 "\n",
                 r.complete ? "complete" : "stopped", r.units_done, r.units_total, r.nodes);
  return r;
}

}  // namespace

EnumResult enumerate_cuts(const Model& model, const EnumConfig& config, const RunOptions& options,
                          const CutVisitor& visitor) {
  config.validate();
  const LexMinTester tester(model);

  std::vector<std::vector<Vertex>> units;
  Search head(model, tester, config, visitor);
  head.prelude(true, units);

  Accumulated acc;
  acc.counts = std::move(head.counts);
  acc.maximal = std::move(head.maximal);
  acc.nodes = head.nodes;
  acc.done.assign(units.size(), 0);
  if (!options.checkpoint_path.empty()) write_checkpoint(options.checkpoint_path, model.fingerprint(), config, acc);
  return process_units(model, tester, config, options, visitor, units, acc);
}

EnumConfig read_checkpoint_config(const std::string& path) {
  return parse_config(load_checkpoint(path).config_text);
}

EnumResult resume(const Model& model, const RunOptions& options, const CutVisitor& visitor,
                  const std::optional<EnumConfig>& expected_config) {
  if (options.checkpoint_path.empty()) throw CheckpointError("resume needs a checkpoint path");
  LoadedCheckpoint cp = load_checkpoint(options.checkpoint_path);
  if (cp.fingerprint != model.fingerprint())
    throw CheckpointMismatch("checkpoint fingerprint " + hex64(cp.fingerprint) + " does not match model " +
                             hex64(model.fingerprint()));
  EnumConfig cfg = parse_config(cp.config_text);
  if (expected_config && expected_config->describe() != cfg.describe())
    throw CheckpointMismatch("checkpoint was written for config '" + cfg.describe() + "', not '" +
                             expected_config->describe() + "'");
  if (expected_config) cfg.checkpoint_interval = expected_config->checkpoint_interval;
  cfg.validate();

  const LexMinTester tester(model);
  std::vector<std::vector<Vertex>> units;
  Search head(model, tester, cfg, visitor);
  head.prelude(false, units);
  if (units.size() != cp.acc.done.size())
    throw CheckpointMismatch("checkpoint records " + std::to_string(cp.acc.done.size()) + " work units, model yields " +
                             std::to_string(units.size()));
  return process_units(model, tester, cfg, options, visitor, units, cp.acc);
}

}  // namespace cut600
