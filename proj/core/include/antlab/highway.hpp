#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "antlab/engine.hpp"
#include "antlab/pattern.hpp"

namespace antlab {

/// A pattern plus ant pose that reappears shifted by `drift` every `period` steps over a
/// 0 background.
struct Highway {
  RuleWord rule;
  Pattern pattern;
  Cell position;
  Direction direction = Direction::North;
  std::size_t period = 0;
  Cell drift;
  Trace trace_cycle;

  /// The pattern on a 0 background with the ant on it.
  Configuration configuration() const { return {pattern.to_picture(), position, direction}; }

  friend bool operator==(const Highway&, const Highway&) = default;
};

/// Which clause of the highway condition failed.
enum class VerifyClause {
  None,
  Malformed,   // period 0, ant outside support, symbol outside alphabet
  SupportExit, // the ant left the support within `period` steps
  Pose,        // wrong landing position or heading after `period` steps
  Recurrence,  // the shifted pattern does not reappear (or a cell ahead is nonzero)
  ZeroDrift,
};

const char* to_string(VerifyClause c);

struct Verdict {
  bool accepted = false;
  VerifyClause clause = VerifyClause::None;
  std::string reason;
  std::optional<Cell> cell;
  std::optional<std::uint64_t> step;
  /// Symbols read while verifying (up to the failure point on rejection).
  Trace observed_trace;

  explicit operator bool() const { return accepted; }
};

/// Checks the highway condition directly: N pattern-only steps without leaving the
/// support, ant lands at position + drift with the same heading, and every support cell
/// equals the evolved pattern one drift ahead (or 0 where that cell is outside the support).
Verdict verify_highway(const Highway& h);

/// Proper divisors N' of the period with an integral scaled drift that also verify.
/// Empty for a minimal highway.
std::vector<std::size_t> smaller_verifying_periods(const Highway& h);

struct Candidate {
  Pattern pattern;  // ant translated to the origin
  Direction direction = Direction::North;
  Cell drift;
  Trace trace;
};

/// Simulates `period` steps from `at_t` and cuts out the pattern on V ∪ (V - drift), where
/// V holds every cell the ant stands on at times t..t+period. Throws DegenerateDriftError
/// when the ant ends where it started.
Candidate extract_candidate(const RuleWord& w, const Configuration& at_t, std::size_t period);

/// Candidate -> Highway with the ant at the origin.
Highway to_highway(const RuleWord& w, Candidate c);

/// The same highway rotated `quarters` quarter turns counter-clockwise about the ant.
Highway rotated(const Highway& h, int quarters);

/// The same highway represented `phase` steps later (ant at the origin).
Highway at_phase(const Highway& h, std::size_t phase);

/// Canonical representative over rotations and cyclic phase shifts: the least
/// (trace rotation, drift, pattern serialisation). Requires a verified highway.
Highway canonicalise(const Highway& h);

/// Lexicographic key used by canonicalise.
using HighwayKey = std::tuple<Trace, std::int64_t, std::int64_t, int,
                              std::vector<std::tuple<std::int64_t, std::int64_t, int>>>;
HighwayKey canonical_key(const Highway& h);

/// True iff `factor` occurs somewhere in the bi-infinite repetition of `cycle`.
bool contains_cyclic_factor(const Trace& cycle, const Trace& factor);

}  // namespace antlab
