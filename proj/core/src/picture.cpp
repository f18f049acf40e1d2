#include "antlab/picture.hpp"

#include <algorithm>

namespace antlab {

Picture::Picture(const Picture& other) : nonzero_(other.nonzero_) {
  tiles_.reserve(other.tiles_.size());
  for (const auto& [key, tile] : other.tiles_) {
    if (tile->nonzero != 0) tiles_.emplace(key, std::make_unique<Tile>(*tile));
  }
}

Picture& Picture::operator=(const Picture& other) {
  if (this != &other) {
    Picture copy(other);
    *this = std::move(copy);
  }
  return *this;
}

const Picture::Tile* Picture::find_tile(const TileKey& k) const {
  auto it = tiles_.find(k);
  return it == tiles_.end() ? nullptr : it->second.get();
}

Picture::Tile& Picture::tile_for_write(const TileKey& k) {
  auto& slot = tiles_[k];
  if (!slot) slot = std::make_unique<Tile>();
  return *slot;
}

std::uint8_t Picture::get(Cell c) const {
  const Tile* t = find_tile(key_of(c));
  return t ? t->cells[index_of(c)] : std::uint8_t{0};
}

void Picture::set(Cell c, std::uint8_t symbol) {
  const TileKey key = key_of(c);
  if (symbol == 0 && find_tile(key) == nullptr) return;
  Tile& t = tile_for_write(key);
  std::uint8_t& slot = t.cells[index_of(c)];
  if (slot == 0 && symbol != 0) {
    ++t.nonzero;
    ++nonzero_;
  } else if (slot != 0 && symbol == 0) {
    --t.nonzero;
    --nonzero_;
  }
  slot = symbol;
}

std::vector<Picture::Entry> Picture::entries() const {
  std::vector<Entry> out;
  out.reserve(nonzero_);
  for_each_nonzero([&](Cell c, std::uint8_t s) { out.emplace_back(c, s); });
  std::sort(out.begin(), out.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  return out;
}

std::optional<Box> Picture::bounds() const {
  std::optional<Box> box;
  for_each_nonzero([&](Cell c, std::uint8_t) {
    if (!box) {
      box = Box{c, c};
    } else {
      box->expand(c);
    }
  });
  return box;
}

bool operator==(const Picture& a, const Picture& b) {
  if (a.nonzero_ != b.nonzero_) return false;
  for (const auto& [key, tile] : a.tiles_) {
    if (tile->nonzero == 0) continue;
    const Picture::Tile* other = b.find_tile(key);
    if (other == nullptr || other->nonzero != tile->nonzero || other->cells != tile->cells) {
      return false;
    }
  }
  return true;
}

}  // namespace antlab
