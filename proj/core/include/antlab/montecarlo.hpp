#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antlab/detect.hpp"
#include "antlab/highway.hpp"

namespace antlab {

enum class ShapeKind { Square, Cross };

/// Support of the random initial pattern, centred on the origin.
struct PatternShape {
  ShapeKind kind = ShapeKind::Square;
  std::int64_t size = 11;

  std::vector<Cell> cells() const;
  std::string to_string() const;
  static PatternShape parse(const std::string& text);  // "square:11", "cross:11"

  friend bool operator==(const PatternShape&, const PatternShape&) = default;
};

struct ExperimentSpec {
  RuleWord rule;
  std::uint64_t runs = 0;
  std::uint64_t steps_per_run = 100'000;
  PatternShape shape;
  std::uint64_t seed = 0;
  std::size_t max_period = 2048;

  /// Throws DomainError on a nontrivial-word or window violation.
  void validate() const;
  DetectOptions detect_options() const;

  friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

/// Run `run_index` of `spec`: the shape's cells i.i.d. uniform over the alphabet on a 0
/// background, ant on the centre cell facing north.
Configuration random_initial(const ExperimentSpec& spec, std::uint64_t run_index);

struct CensusReport {
  static constexpr std::size_t kExamplesPerPeriod = 4;

  ExperimentSpec spec;
  std::uint64_t total_runs = 0;
  std::uint64_t no_highway = 0;
  /// Runs that hit the nonzero-cell cap; also counted in no_highway.
  std::uint64_t resource_errors = 0;
  std::map<std::size_t, std::uint64_t> period_counts;
  /// Smallest run indices that produced each period.
  std::map<std::size_t, std::vector<std::uint64_t>> example_runs;
  double wall_clock_seconds = 0.0;

  std::uint64_t highway_runs() const { return total_runs - no_highway; }
  double highway_fraction() const;
  /// Share of highway runs that reached `period`.
  double period_share(std::size_t period) const;
  std::optional<std::size_t> dominant_period() const;

  /// Folds in the outcome of one run (period 0 = no highway).
  void record(std::uint64_t run_index, std::size_t period, bool resource_error);
  /// Associative, commutative merge; both reports must share the spec.
  void merge(const CensusReport& other);
};

struct CensusOptions {
  /// 0 = take ANTLAB_WORKERS from the environment, else hardware concurrency.
  unsigned workers = 0;
  /// Runs per batch; checkpoints are written between batches.
  std::uint64_t batch_size = 1024;
  std::optional<std::filesystem::path> checkpoint;
  /// Stop (as if interrupted) once at least this many runs are done.
  std::optional<std::uint64_t> stop_after;
};

unsigned resolve_workers(unsigned requested);

/// Classifies every run by detect() and aggregates by period. The report for a fixed spec
/// does not depend on the worker count or batch size.
CensusReport run_census(const ExperimentSpec& spec, const CensusOptions& opts = {});

/// Continues the census stored in a checkpoint file.
CensusReport resume_census(const std::filesystem::path& checkpoint, const CensusOptions& opts = {});

struct CensusCheckpoint {
  CensusReport partial;
  std::uint64_t next_run = 0;
};

std::string census_to_json(const CensusReport& r, bool with_timing = true);
CensusReport census_from_json(const std::string& text);
std::string census_to_csv(const CensusReport& r);
std::string checkpoint_to_json(const CensusCheckpoint& c);
CensusCheckpoint checkpoint_from_json(const std::string& text);

struct MinedHighway {
  Highway highway;  // canonical form
  std::uint64_t seed = 0;
  std::uint64_t run_index = 0;
  std::uint64_t steps_to_detect = 0;
};

struct MineOptions {
  unsigned workers = 0;
  std::uint64_t batch_size = 1024;
  /// Checked between batches; mining stops early once it returns true.
  std::function<bool(const std::vector<MinedHighway>&)> enough;
};

struct MineResult {
  std::vector<MinedHighway> highways;  // deduplicated by canonical form, ordered by run index
  std::uint64_t runs_done = 0;
};

/// Runs the census loop over `spec.runs` runs and keeps each distinct canonical highway
/// that satisfies `predicate`, with the run that first produced it.
MineResult mine(const ExperimentSpec& spec, const std::function<bool(const Highway&)>& predicate,
                const MineOptions& opts = {});

/// Re-runs the exact simulation of a mined record and checks it lands on the same
/// canonical highway.
bool reproduces(const ExperimentSpec& spec, const MinedHighway& mined);

}  // namespace antlab
