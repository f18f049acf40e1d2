#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace antlab {

struct Cell {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr bool operator==(const Cell&, const Cell&) = default;

  // Row-major order: (y, x). This is the serialisation order of every file format.
  friend constexpr std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }

  constexpr Cell& operator+=(const Cell& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Cell& operator-=(const Cell& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend constexpr Cell operator+(Cell a, const Cell& b) { return a += b; }
  friend constexpr Cell operator-(Cell a, const Cell& b) { return a -= b; }
  friend constexpr Cell operator-(const Cell& a) { return {-a.x, -a.y}; }
  friend constexpr Cell operator*(std::int64_t s, const Cell& a) { return {s * a.x, s * a.y}; }

  constexpr bool is_zero() const { return x == 0 && y == 0; }
  constexpr int parity() const { return static_cast<int>(((x + y) % 2 + 2) % 2); }
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(c.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(c.y) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Quarter-turn rotation about the origin, counter-clockwise `quarters` times.
constexpr Cell rotate_ccw(Cell c, int quarters) {
  switch (((quarters % 4) + 4) % 4) {
    case 1: return {-c.y, c.x};
    case 2: return {-c.x, -c.y};
    case 3: return {c.y, -c.x};
    default: return c;
  }
}

/// Ant heading. Values are ordered counter-clockwise so a left turn is +1 mod 4.
enum class Direction : std::uint8_t { East = 0, North = 1, West = 2, South = 3 };

constexpr Direction rotate_left(Direction d) {
  return static_cast<Direction>((static_cast<int>(d) + 1) & 3);
}
constexpr Direction rotate_right(Direction d) {
  return static_cast<Direction>((static_cast<int>(d) + 3) & 3);
}
constexpr Direction rotate_ccw(Direction d, int quarters) {
  return static_cast<Direction>((static_cast<int>(d) + (quarters % 4) + 4) & 3);
}

constexpr Cell unit_vector(Direction d) {
  constexpr std::array<Cell, 4> kUnits{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  return kUnits[static_cast<std::size_t>(d)];
}

constexpr bool is_horizontal(Direction d) {
  return d == Direction::East || d == Direction::West;
}

constexpr char direction_letter(Direction d) {
  constexpr std::array<char, 4> kLetters{'E', 'N', 'W', 'S'};
  return kLetters[static_cast<std::size_t>(d)];
}

constexpr std::optional<Direction> direction_from_letter(char c) {
  switch (c) {
    case 'E': return Direction::East;
    case 'N': return Direction::North;
    case 'W': return Direction::West;
    case 'S': return Direction::South;
    default: return std::nullopt;
  }
}

/// Inclusive axis-aligned box.
struct Box {
  Cell min;
  Cell max;

  std::int64_t width() const { return max.x - min.x + 1; }
  std::int64_t height() const { return max.y - min.y + 1; }
  bool contains(Cell c) const {
    return c.x >= min.x && c.x <= max.x && c.y >= min.y && c.y <= max.y;
  }
  void expand(Cell c) {
    if (c.x < min.x) min.x = c.x;
    if (c.y < min.y) min.y = c.y;
    if (c.x > max.x) max.x = c.x;
    if (c.y > max.y) max.y = c.y;
  }
};

}  // namespace antlab
