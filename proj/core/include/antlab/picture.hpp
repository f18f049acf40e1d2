#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "antlab/geometry.hpp"

namespace antlab {

class Simulator;

/// Sparse picture over Z^2. Cells that were never written read as symbol 0.
///
/// Storage is a hash map of 64x64 byte tiles keyed by tile coordinate. Tiles keep their
/// own nonzero count so equality and enumeration only look at nonzero cells: two pictures
/// are equal iff they agree as total functions, regardless of which tiles happen to be
/// allocated.
class Picture {
 public:
  static constexpr int kTileBits = 6;
  static constexpr std::int64_t kTileSize = std::int64_t{1} << kTileBits;
  static constexpr std::int64_t kTileMask = kTileSize - 1;

  using Entry = std::pair<Cell, std::uint8_t>;

  Picture() = default;
  Picture(const Picture& other);
  Picture& operator=(const Picture& other);
  Picture(Picture&&) noexcept = default;
  Picture& operator=(Picture&&) noexcept = default;
  ~Picture() = default;

  std::uint8_t get(Cell c) const;
  void set(Cell c, std::uint8_t symbol);

  std::size_t nonzero_count() const { return nonzero_; }
  bool empty() const { return nonzero_ == 0; }

  /// Nonzero cells sorted by (y, x).
  std::vector<Entry> entries() const;
  /// Bounding box of the nonzero cells; nullopt for the white picture.
  std::optional<Box> bounds() const;

  template <typename F>
  void for_each_nonzero(F&& f) const {
    for (const auto& [key, tile] : tiles_) {
      if (tile->nonzero == 0) continue;
      for (std::size_t i = 0; i < tile->cells.size(); ++i) {
        if (tile->cells[i] != 0) f(cell_of(key, i), tile->cells[i]);
      }
    }
  }

  friend bool operator==(const Picture& a, const Picture& b);

 private:
  friend class Simulator;

  struct TileKey {
    std::int64_t tx = 0;
    std::int64_t ty = 0;
    friend bool operator==(const TileKey&, const TileKey&) = default;
  };
  struct TileKeyHash {
    std::size_t operator()(const TileKey& k) const noexcept {
      return CellHash{}(Cell{k.tx, k.ty});
    }
  };
  struct Tile {
    std::array<std::uint8_t, kTileSize * kTileSize> cells{};
    std::uint32_t nonzero = 0;
  };

  static TileKey key_of(Cell c) { return {c.x >> kTileBits, c.y >> kTileBits}; }
  static std::size_t index_of(Cell c) {
    return static_cast<std::size_t>(((c.y & kTileMask) << kTileBits) | (c.x & kTileMask));
  }
  static Cell cell_of(const TileKey& k, std::size_t index) {
    return {(k.tx << kTileBits) + static_cast<std::int64_t>(index & kTileMask),
            (k.ty << kTileBits) + static_cast<std::int64_t>(index >> kTileBits)};
  }

  Tile& tile_for_write(const TileKey& k);
  const Tile* find_tile(const TileKey& k) const;

  std::unordered_map<TileKey, std::unique_ptr<Tile>, TileKeyHash> tiles_;
  std::size_t nonzero_ = 0;
};

}  // namespace antlab
