#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "antlab/engine.hpp"
#include "antlab/geometry.hpp"
#include "antlab/rule_word.hpp"
#include "antlab/trace.hpp"

namespace antlab {

/// A finite assignment of symbols to a support. Unlike Picture, symbol 0 inside the
/// support is a real value; cells outside the support are undefined.
class Pattern {
 public:
  using Map = std::map<Cell, std::uint8_t>;  // ordered by (y, x)

  Pattern() = default;
  explicit Pattern(Map values) : values_(std::move(values)) {}

  /// The restriction of `picture` to `support`.
  template <typename Cells>
  static Pattern restrict(const Picture& picture, const Cells& support) {
    Map m;
    for (const Cell& c : support) m.emplace(c, picture.get(c));
    return Pattern(std::move(m));
  }
  /// Every cell of `box` taken from `picture`.
  static Pattern from_box(const Picture& picture, const Box& box);

  bool contains(Cell c) const { return values_.count(c) != 0; }
  std::uint8_t at(Cell c) const { return values_.at(c); }
  std::optional<std::uint8_t> find(Cell c) const;
  void set(Cell c, std::uint8_t s) { values_[c] = s; }

  std::size_t size() const { return values_.size(); }
  const Map& values() const { return values_; }
  Map& mutable_values() { return values_; }
  std::optional<Box> bounds() const;

  Pattern translated(Cell offset) const;
  Pattern rotated_ccw(int quarters) const;

  /// The picture that is this pattern on a 0 background.
  Picture to_picture() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Map values_;
};

struct PatternState {
  Pattern pattern;
  Cell position;
  Direction direction = Direction::North;

  friend bool operator==(const PatternState&, const PatternState&) = default;
};

struct PatternRun {
  PatternState state;
  Trace trace;
  /// Set when the ant left the support: the 1-based index of the step whose move landed
  /// outside. `state` then holds the configuration just after that step.
  std::optional<std::uint64_t> exited_at;
};

/// Steps the ant over the pattern only, stopping the moment a move lands outside the
/// support. Never throws for support exits; see apply_pattern_steps.
PatternRun try_apply_pattern_steps(const RuleWord& w, PatternState start, std::uint64_t steps);

/// As try_apply_pattern_steps but throws OutOfSupportError on exit.
PatternState apply_pattern_steps(const RuleWord& w, PatternState start, std::uint64_t steps,
                                 Trace* trace = nullptr);

}  // namespace antlab
