#include "antlab/pattern.hpp"

#include "antlab/errors.hpp"

namespace antlab {

Pattern Pattern::from_box(const Picture& picture, const Box& box) {
  Map m;
  for (std::int64_t y = box.min.y; y <= box.max.y; ++y) {
    for (std::int64_t x = box.min.x; x <= box.max.x; ++x) m.emplace(Cell{x, y}, picture.get({x, y}));
  }
  return Pattern(std::move(m));
}

std::optional<std::uint8_t> Pattern::find(Cell c) const {
  auto it = values_.find(c);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::optional<Box> Pattern::bounds() const {
  std::optional<Box> box;
  for (const auto& [c, s] : values_) {
    if (!box) {
      box = Box{c, c};
    } else {
      box->expand(c);
    }
  }
  return box;
}

Pattern Pattern::translated(Cell offset) const {
  Map m;
  for (const auto& [c, s] : values_) m.emplace(c + offset, s);
  return Pattern(std::move(m));
}

Pattern Pattern::rotated_ccw(int quarters) const {
  Map m;
  for (const auto& [c, s] : values_) m.emplace(rotate_ccw(c, quarters), s);
  return Pattern(std::move(m));
}

Picture Pattern::to_picture() const {
  Picture p;
  for (const auto& [c, s] : values_) {
    if (s != 0) p.set(c, s);
  }
  return p;
}

PatternRun try_apply_pattern_steps(const RuleWord& w, PatternState start, std::uint64_t steps) {
  if (!start.pattern.contains(start.position)) {
    throw DomainError("ant position is outside the pattern support");
  }
  for (const auto& [c, s] : start.pattern.values()) {
    if (s >= w.size()) throw DomainError("pattern symbol outside the rule word alphabet");
  }
  PatternRun out{std::move(start), {}, std::nullopt};
  out.trace.reserve(static_cast<std::size_t>(steps));
  Pattern::Map& cells = out.state.pattern.mutable_values();
  const auto n = static_cast<unsigned>(w.size());
  for (std::uint64_t i = 0; i < steps; ++i) {
    auto it = cells.find(out.state.position);
    const std::uint8_t read = it->second;
    out.trace.push_back(read);
    it->second = static_cast<std::uint8_t>((read + 1u) % n);
    out.state.direction = w.turn(read) == Turn::Right ? rotate_right(out.state.direction)
                                                      : rotate_left(out.state.direction);
    out.state.position += unit_vector(out.state.direction);
    if (cells.count(out.state.position) == 0) {
      out.exited_at = i + 1;
      break;
    }
  }
  return out;
}

PatternState apply_pattern_steps(const RuleWord& w, PatternState start, std::uint64_t steps,
                                 Trace* trace) {
  PatternRun r = try_apply_pattern_steps(w, std::move(start), steps);
  if (r.exited_at) throw OutOfSupportError(*r.exited_at);
  if (trace) *trace = std::move(r.trace);
  return std::move(r.state);
}

}  // namespace antlab
