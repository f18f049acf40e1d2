#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "antlab/engine.hpp"
#include "antlab/highway.hpp"

namespace antlab {

struct DetectOptions {
  std::uint64_t max_steps = RunLimits{}.max_steps;
  std::size_t max_period = 2048;
  std::size_t ring_capacity = TraceRing::kDefaultCapacity;
  std::size_t max_nonzero = RunLimits{}.max_nonzero;
};

struct DetectionReport {
  enum class Outcome { Highway, NoHighwayWithinBudget };

  Outcome outcome = Outcome::NoHighwayWithinBudget;
  std::size_t period = 0;
  Cell drift;
  /// First step of the trace window that was found periodic and then verified. Every
  /// step from here on follows the highway, so this bounds the preperiod from above.
  std::uint64_t preperiod_bound = 0;
  /// Step count at which the periodic window was observed.
  std::uint64_t detected_at = 0;
  std::uint64_t steps_simulated = 0;
  std::size_t trace_suffix_checked = 0;
  /// The verified highway, extracted at `detected_at` (ant at the origin).
  std::optional<Highway> highway;

  bool found() const { return outcome == Outcome::Highway; }
};

/// Simulates up to `opts.max_steps` steps, scanning the trace suffix every
/// `opts.max_period` steps for the least p whose last 3p symbols are p-periodic. A hit is
/// only reported once the extracted candidate passes verify_highway and no proper divisor
/// period verifies. Deterministic. Propagates ResourceLimitError.
DetectionReport detect(const RuleWord& w, Configuration c, const DetectOptions& opts = {});

}  // namespace antlab
