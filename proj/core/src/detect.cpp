#include "antlab/detect.hpp"

#include <algorithm>

#include "antlab/errors.hpp"

namespace antlab {

namespace {

constexpr std::size_t kWindowRepeats = 3;

// Verified highway of period p at the simulator's current time, or nullopt.
std::optional<Highway> confirm(const RuleWord& w, const Simulator& sim, std::size_t p) {
  Candidate candidate;
  try {
    candidate = extract_candidate(w, sim.configuration(), p);
  } catch (const DegenerateDriftError&) {
    return std::nullopt;
  }
  Highway h = to_highway(w, std::move(candidate));
  if (!verify_highway(h)) return std::nullopt;
  if (!smaller_verifying_periods(h).empty()) return std::nullopt;
  return h;
}

}  // namespace

DetectionReport detect(const RuleWord& w, Configuration c, const DetectOptions& opts) {
  if (!w.nontrivial()) throw DomainError("detect needs a rule word with both L and R");
  if (opts.max_period == 0) throw DomainError("max_period must be positive");
  if (kWindowRepeats * opts.max_period > opts.ring_capacity) {
    throw DomainError("max_period must not exceed trace ring capacity / 3");
  }

  Simulator sim(w, std::move(c), opts.max_nonzero);
  TraceRing ring(opts.ring_capacity);
  DetectionReport report;

  while (sim.steps() < opts.max_steps) {
    const std::uint64_t chunk = std::min<std::uint64_t>(opts.max_period, opts.max_steps - sim.steps());
    sim.run(chunk, [&](std::uint8_t s) { ring.push(s); });

    const std::size_t window_len = std::min(ring.size(), kWindowRepeats * opts.max_period);
    const auto window = ring.suffix(window_len);
    // Increasing p; a periodic p that fails verification just moves the search on.
    std::size_t from = 1;
    while (from <= opts.max_period) {
      const std::size_t p = smallest_suffix_period(window, opts.max_period, kWindowRepeats, from);
      if (p == 0) break;
      if (auto h = confirm(w, sim, p)) {
        report.outcome = DetectionReport::Outcome::Highway;
        report.period = p;
        report.drift = h->drift;
        report.detected_at = sim.steps();
        report.preperiod_bound = sim.steps() - kWindowRepeats * p;
        report.steps_simulated = sim.steps();
        report.trace_suffix_checked = kWindowRepeats * p;
        report.highway = std::move(h);
        return report;
      }
      from = p + 1;
    }
  }
  report.steps_simulated = sim.steps();
  report.trace_suffix_checked = std::min(ring.size(), kWindowRepeats * opts.max_period);
  return report;
}

}  // namespace antlab
