#include "antlab/engine.hpp"

#include <string>

namespace antlab {

namespace {

std::uint8_t modulus_of(const RuleWord& w) {
  if (w.size() == 0 || w.size() > RuleWord::kMaxLength) {
    throw DomainError("rule word length must be in [1, 256]");
  }
  // 256 wraps to 0, which the increment in Simulator::step never reaches anyway.
  return static_cast<std::uint8_t>(w.size());
}

Direction turned(Direction d, Turn t) {
  return t == Turn::Right ? rotate_right(d) : rotate_left(d);
}

}  // namespace

Configuration step(const RuleWord& w, Configuration c) {
  const std::uint8_t read = c.picture.get(c.position);
  c.picture.set(c.position, static_cast<std::uint8_t>((read + 1u) % w.size()));
  c.direction = turned(c.direction, w.turn(read));
  c.position += unit_vector(c.direction);
  return c;
}

Configuration unstep(const RuleWord& w, Configuration c) {
  const Cell previous = c.position - unit_vector(c.direction);
  const std::uint8_t stored = c.picture.get(previous);
  const auto symbol = static_cast<std::uint8_t>((stored + w.size() - 1) % w.size());
  c.picture.set(previous, symbol);
  // The turn taken on `symbol` produced the current heading; undo it.
  c.direction = w.turn(symbol) == Turn::Right ? rotate_left(c.direction) : rotate_right(c.direction);
  c.position = previous;
  return c;
}

RunResult run(const RuleWord& w, Configuration c, std::uint64_t steps, const RunLimits& limits) {
  Simulator sim(w, std::move(c), limits.max_nonzero);
  Trace trace;
  trace.reserve(static_cast<std::size_t>(steps));
  sim.run(steps, [&](std::uint8_t s) { trace.push_back(s); });
  return {std::move(sim).release(), std::move(trace)};
}

Simulator::Simulator(RuleWord w, Configuration c, std::size_t max_nonzero)
    : rule_(std::move(w)),
      config_(std::move(c)),
      position_(config_.position),
      direction_(static_cast<std::uint8_t>(config_.direction)),
      modulus_(modulus_of(rule_)),
      max_nonzero_(max_nonzero) {
  for (std::size_t s = 0; s < rule_.size(); ++s) {
    turn_delta_[s] = rule_.turn(static_cast<std::uint8_t>(s)) == Turn::Left ? 1 : 3;
  }
}

void Simulator::load_tile(const Picture::TileKey& key) {
  tile_ = &config_.picture.tile_for_write(key);
  tile_key_ = key;
}

void Simulator::overflow() const {
  throw ResourceLimitError("nonzero cell count exceeded cap of " + std::to_string(max_nonzero_),
                           steps_ + 1);
}

void Simulator::unstep() {
  const Cell previous = position_ - unit_vector(static_cast<Direction>(direction_));
  const Picture::TileKey key = Picture::key_of(previous);
  if (tile_ == nullptr || !(key == tile_key_)) load_tile(key);
  std::uint8_t& slot = tile_->cells[Picture::index_of(previous)];
  const std::uint8_t stored = slot;
  const auto symbol = static_cast<std::uint8_t>(stored == 0 ? rule_.size() - 1 : stored - 1);
  slot = symbol;
  if (stored == 0) {
    ++tile_->nonzero;
    ++config_.picture.nonzero_;
  } else if (symbol == 0) {
    --tile_->nonzero;
    --config_.picture.nonzero_;
  }
  // Undo the turn: left turns added 1, right turns added 3.
  direction_ = static_cast<std::uint8_t>((direction_ + 4 - turn_delta_[symbol]) & 3);
  position_ = previous;
  if (steps_ > 0) --steps_;
}

Configuration Simulator::configuration() const {
  Configuration out{config_.picture, position_, static_cast<Direction>(direction_)};
  return out;
}

Configuration Simulator::release() && {
  config_.position = position_;
  config_.direction = static_cast<Direction>(direction_);
  tile_ = nullptr;
  return std::move(config_);
}

}  // namespace antlab
