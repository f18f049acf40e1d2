#include "antlab/highway.hpp"

#include <algorithm>
#include <unordered_set>

#include "antlab/errors.hpp"

namespace antlab {

const char* to_string(VerifyClause c) {
  switch (c) {
    case VerifyClause::None: return "none";
    case VerifyClause::Malformed: return "malformed";
    case VerifyClause::SupportExit: return "support-exit";
    case VerifyClause::Pose: return "pose";
    case VerifyClause::Recurrence: return "recurrence";
    case VerifyClause::ZeroDrift: return "zero-drift";
  }
  return "unknown";
}

namespace {

Verdict reject(VerifyClause clause, std::string reason, Trace trace = {}) {
  Verdict v;
  v.clause = clause;
  v.reason = std::move(reason);
  v.observed_trace = std::move(trace);
  return v;
}

std::string cell_text(Cell c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

}  // namespace

Verdict verify_highway(const Highway& h) {
  if (h.period == 0) return reject(VerifyClause::Malformed, "period must be positive");
  if (!h.pattern.contains(h.position)) {
    return reject(VerifyClause::Malformed, "ant position " + cell_text(h.position) + " outside support");
  }
  for (const auto& [c, s] : h.pattern.values()) {
    if (s >= h.rule.size()) {
      Verdict v = reject(VerifyClause::Malformed, "symbol outside alphabet at " + cell_text(c));
      v.cell = c;
      return v;
    }
  }

  PatternRun run = try_apply_pattern_steps(h.rule, {h.pattern, h.position, h.direction}, h.period);
  if (run.exited_at) {
    Verdict v = reject(VerifyClause::SupportExit,
                       "ant left the support at step " + std::to_string(*run.exited_at) + " landing on " +
                           cell_text(run.state.position),
                       std::move(run.trace));
    v.step = run.exited_at;
    v.cell = run.state.position;
    return v;
  }

  const Cell expected = h.position + h.drift;
  if (run.state.position != expected || run.state.direction != h.direction) {
    Verdict v = reject(VerifyClause::Pose,
                       "ant ends at " + cell_text(run.state.position) + " heading " +
                           direction_letter(run.state.direction) + ", expected " + cell_text(expected) +
                           " heading " + direction_letter(h.direction),
                       std::move(run.trace));
    v.cell = run.state.position;
    v.step = h.period;
    return v;
  }

  const Pattern& evolved = run.state.pattern;
  for (const auto& [c, s] : h.pattern.values()) {
    const std::uint8_t ahead = evolved.find(c + h.drift).value_or(0);
    if (s != ahead) {
      Verdict v = reject(VerifyClause::Recurrence,
                         "cell " + cell_text(c) + " holds " + std::to_string(s) + " but " +
                             std::to_string(ahead) + " one drift ahead",
                         std::move(run.trace));
      v.cell = c;
      return v;
    }
  }

  if (h.drift.is_zero()) return reject(VerifyClause::ZeroDrift, "drift is (0,0)", std::move(run.trace));

  Verdict v;
  v.accepted = true;
  v.observed_trace = std::move(run.trace);
  return v;
}

Candidate extract_candidate(const RuleWord& w, const Configuration& at_t, std::size_t period) {
  if (period == 0) throw DomainError("candidate period must be positive");
  Simulator sim(w, at_t);
  std::vector<Cell> visited;
  visited.reserve(period + 1);
  Trace trace;
  trace.reserve(period);
  visited.push_back(sim.position());
  for (std::size_t i = 0; i < period; ++i) {
    trace.push_back(sim.step());
    visited.push_back(sim.position());
  }
  const Cell drift = sim.position() - at_t.position;
  if (drift.is_zero()) {
    throw DegenerateDriftError("ant returns to its start cell after " + std::to_string(period) + " steps");
  }
  std::unordered_set<Cell, CellHash> support(visited.begin(), visited.end());
  for (const Cell& c : visited) support.insert(c - drift);

  Pattern::Map values;
  for (const Cell& c : support) values.emplace(c - at_t.position, at_t.picture.get(c));
  return {Pattern(std::move(values)), sim.direction(), drift, std::move(trace)};
}

Highway to_highway(const RuleWord& w, Candidate c) {
  Highway h;
  h.rule = w;
  h.pattern = std::move(c.pattern);
  h.position = {0, 0};
  h.direction = c.direction;
  h.period = c.trace.size();
  h.drift = c.drift;
  h.trace_cycle = std::move(c.trace);
  return h;
}

std::vector<std::size_t> smaller_verifying_periods(const Highway& h) {
  std::vector<std::size_t> out;
  const Configuration start = h.configuration();
  for (std::size_t d = 1; d < h.period; ++d) {
    if (h.period % d != 0) continue;
    const auto scale = static_cast<std::int64_t>(h.period / d);
    if (h.drift.x % scale != 0 || h.drift.y % scale != 0) continue;
    try {
      Highway smaller = to_highway(h.rule, extract_candidate(h.rule, start, d));
      if (smaller.drift == Cell{h.drift.x / scale, h.drift.y / scale} && verify_highway(smaller)) {
        out.push_back(d);
      }
    } catch (const DegenerateDriftError&) {
    }
  }
  return out;
}

Highway rotated(const Highway& h, int quarters) {
  Highway r = h;
  r.pattern = h.pattern.rotated_ccw(quarters);
  r.position = rotate_ccw(h.position, quarters);
  r.direction = rotate_ccw(h.direction, quarters);
  r.drift = rotate_ccw(h.drift, quarters);
  return r;
}

Highway at_phase(const Highway& h, std::size_t phase) {
  // One extra period lays down the wake behind the ant, which the candidate support reaches.
  Simulator sim(h.rule, h.configuration());
  sim.run(phase + h.period);
  return to_highway(h.rule, extract_candidate(h.rule, sim.configuration(), h.period));
}

HighwayKey canonical_key(const Highway& h) {
  std::vector<std::tuple<std::int64_t, std::int64_t, int>> cells;
  cells.reserve(h.pattern.size());
  for (const auto& [c, s] : h.pattern.values()) {
    const Cell rel = c - h.position;
    cells.emplace_back(rel.y, rel.x, s);
  }
  std::sort(cells.begin(), cells.end());
  return {h.trace_cycle, h.drift.x, h.drift.y, static_cast<int>(h.direction), std::move(cells)};
}

Highway canonicalise(const Highway& h) {
  const std::size_t n = h.period;
  if (n == 0) throw DomainError("cannot canonicalise a highway of period 0");

  // The trace is invariant under rotation, so only phases that start the least trace
  // rotation can win; compare rotations directly.
  const Trace& t = h.trace_cycle;
  if (t.size() != n) throw DomainError("trace_cycle length differs from period");
  auto rotation_less = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint8_t x = t[(a + i) % n];
      const std::uint8_t y = t[(b + i) % n];
      if (x != y) return x < y;
    }
    return false;
  };
  std::vector<std::size_t> best_phases{0};
  for (std::size_t phase = 1; phase < n; ++phase) {
    if (rotation_less(phase, best_phases.front())) {
      best_phases.assign(1, phase);
    } else if (!rotation_less(best_phases.front(), phase)) {
      best_phases.push_back(phase);
    }
  }

  std::optional<Highway> best;
  std::optional<HighwayKey> best_key;
  for (std::size_t phase : best_phases) {
    const Highway shifted = at_phase(h, phase);
    for (int q = 0; q < 4; ++q) {
      Highway r = rotated(shifted, q);
      HighwayKey key = canonical_key(r);
      if (!best_key || key < *best_key) {
        best_key = std::move(key);
        best = std::move(r);
      }
    }
  }
  return *best;
}

bool contains_cyclic_factor(const Trace& cycle, const Trace& factor) {
  const std::size_t n = cycle.size();
  if (factor.empty()) return true;
  if (n == 0) return false;
  for (std::size_t start = 0; start < n; ++start) {
    std::size_t j = 0;
    while (j < factor.size() && cycle[(start + j) % n] == factor[j]) ++j;
    if (j == factor.size()) return true;
  }
  return false;
}

}  // namespace antlab
