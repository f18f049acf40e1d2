#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "antlab/errors.hpp"
#include "antlab/geometry.hpp"
#include "antlab/picture.hpp"
#include "antlab/rule_word.hpp"
#include "antlab/trace.hpp"

namespace antlab {

struct Configuration {
  Picture picture;
  Cell position;
  Direction direction = Direction::North;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Caller-supplied resource limits for a simulation.
struct RunLimits {
  std::uint64_t max_steps = 10'000'000;
  std::size_t max_nonzero = 100'000'000;
};

/// One application of the transition function. Pure: `c` is taken by value.
Configuration step(const RuleWord& w, Configuration c);

/// Inverse of `step`: unstep(w, step(w, c)) == c and step(w, unstep(w, c)) == c.
Configuration unstep(const RuleWord& w, Configuration c);

struct RunResult {
  Configuration configuration;
  Trace trace;
};

/// Applies `steps` steps and returns the final configuration with the full trace.
/// Throws ResourceLimitError when the nonzero-cell count exceeds `limits.max_nonzero`.
RunResult run(const RuleWord& w, Configuration c, std::uint64_t steps, const RunLimits& limits = {});

/// In-place simulator for the hot loop. Caches the tile under the ant so consecutive
/// steps inside one 64x64 tile never touch the hash map.
class Simulator {
 public:
  Simulator(RuleWord w, Configuration c, std::size_t max_nonzero = RunLimits{}.max_nonzero);

  /// One step; returns the symbol read (before increment).
  std::uint8_t step() {
    const Cell pos = position_;
    const Picture::TileKey key = Picture::key_of(pos);
    if (tile_ == nullptr || !(key == tile_key_)) load_tile(key);
    std::uint8_t& slot = tile_->cells[Picture::index_of(pos)];
    const std::uint8_t read = slot;
    const std::uint8_t next = static_cast<std::uint8_t>(read + 1 == modulus_ ? 0 : read + 1);
    slot = next;
    if (read == 0) {
      ++tile_->nonzero;
      if (++config_.picture.nonzero_ > max_nonzero_) overflow();
    } else if (next == 0) {
      --tile_->nonzero;
      --config_.picture.nonzero_;
    }
    direction_ = static_cast<std::uint8_t>((direction_ + turn_delta_[read]) & 3);
    position_ += unit_vector(static_cast<Direction>(direction_));
    ++steps_;
    return read;
  }

  /// Runs `n` steps, handing every read symbol to `sink`.
  template <typename Sink>
  void run(std::uint64_t n, Sink&& sink) {
    for (std::uint64_t i = 0; i < n; ++i) sink(step());
  }
  void run(std::uint64_t n) {
    for (std::uint64_t i = 0; i < n; ++i) step();
  }

  /// Exact inverse of `step`.
  void unstep();

  const RuleWord& rule() const { return rule_; }
  std::uint64_t steps() const { return steps_; }
  Cell position() const { return position_; }
  Direction direction() const { return static_cast<Direction>(direction_); }
  const Picture& picture() const { return config_.picture; }
  std::size_t nonzero_count() const { return config_.picture.nonzero_; }

  /// Snapshot of the current configuration.
  Configuration configuration() const;
  /// Moves the configuration out, leaving the simulator unusable.
  Configuration release() &&;

 private:
  void load_tile(const Picture::TileKey& key);
  [[noreturn]] void overflow() const;

  RuleWord rule_;
  Configuration config_;
  Cell position_;
  std::uint8_t direction_;
  std::uint8_t modulus_;
  std::array<std::uint8_t, RuleWord::kMaxLength> turn_delta_{};
  std::size_t max_nonzero_;
  std::uint64_t steps_ = 0;
  Picture::Tile* tile_ = nullptr;
  Picture::TileKey tile_key_;
};

}  // namespace antlab
