#ifndef CUT600_ENUMERATE_HPP
#define CUT600_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cut600/count_table.hpp"
#include "cut600/group.hpp"
#include "cut600/model.hpp"

namespace cut600 {

inline constexpr int kMaxCutSize = 24;

/// What to count. Everything here changes the result and is therefore
/// recorded in checkpoints.
struct EnumConfig {
  int min_size = 1;
  int max_size = kMaxCutSize;
  bool maximal_only = false;
  /// When set, only cuts having one of these cuts as a leading prefix are
  /// counted, and only subtrees that can contain such cuts are searched.
  std::optional<std::vector<Cut>> subtree_filter;
  /// Nodes between checkpoint writes (written at work-unit boundaries).
  std::uint64_t checkpoint_interval = 10'000'000;
  /// Lex-min cuts of this size (or of max_size, if smaller) are the
  /// independent work units. At 7 the largest of the 334,380 units holds
  /// about 2% of the full search.
  int split_depth = 7;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
  /// One-line textual form, stored in checkpoints.
  std::string describe() const;
};

/// How to run. Nothing here changes the counts.
struct RunOptions {
  int workers = 1;
  /// Empty: no checkpointing.
  std::string checkpoint_path;
  /// Stop handing out work units after this many seconds.
  std::optional<double> time_budget_seconds;
  /// Stop after completing this many work units in this run.
  std::optional<std::uint64_t> unit_limit;
  /// Progress lines with node counts on stderr.
  bool progress = false;
};

/// Called once per counted cut with its sorted members. May be invoked
/// concurrently from several workers when workers > 1; the callee must be
/// thread-safe in that case.
using CutVisitor = std::function<void(std::span<const Vertex> cut, int stabilizer_order, bool maximal)>;

struct EnumResult {
  /// Orbit counts for the configuration (only maximal cuts when
  /// maximal_only is set).
  CountTable counts;
  /// Orbit counts of the maximal cuts within the size range.
  CountTable maximal;
  /// Lex-min cuts reached (all sizes, including ones outside the range).
  std::uint64_t nodes = 0;
  std::uint64_t units_total = 0;
  std::uint64_t units_done = 0;
  /// False when a budget or unit limit stopped the run early.
  bool complete = false;
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The checkpoint was written for another model or configuration.
class CheckpointMismatch : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};

/// Orderly generation of lex-min independent sets: visits exactly one
/// representative of every orbit of independent sets with size in
/// [min_size, max_size] and counts them by (size, stabilizer order).
EnumResult enumerate_cuts(const Model& model, const EnumConfig& config, const RunOptions& options = {},
                          const CutVisitor& visitor = {});

/// Continues the run recorded in options.checkpoint_path. Cuts counted
/// before the checkpoint are not visited again. Throws CheckpointMismatch if
/// the checkpoint belongs to a different model or configuration, and
/// CheckpointError if it cannot be read.
EnumResult resume(const Model& model, const RunOptions& options, const CutVisitor& visitor = {},
                  const std::optional<EnumConfig>& expected_config = std::nullopt);

/// The configuration stored in a checkpoint file.
EnumConfig read_checkpoint_config(const std::string& path);

}  // namespace cut600

#endif  // CUT600_ENUMERATE_HPP
