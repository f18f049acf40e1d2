#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "antlab/engine.hpp"

namespace antlab {

enum class ImageFormat { Pgm, Svg };

struct RenderSpec {
  /// Cells to draw; defaults to the bounding box of the nonzero cells and the ant.
  std::optional<Box> region;
  /// Cells of background added around the automatic region.
  std::int64_t margin = 1;
  ImageFormat format = ImageFormat::Pgm;
  /// Grey level per symbol; empty means default_palette(|w|).
  std::vector<std::uint8_t> palette;
  int cell_size = 4;
  bool ant_marker = true;
};

/// Symbol s -> floor(255 * (1 - s / (n - 1))): white for 0, black for the last symbol.
std::vector<std::uint8_t> default_palette(std::size_t alphabet);

/// Throws DomainError unless the palette has one distinct grey per symbol.
void check_palette(const std::vector<std::uint8_t>& palette, std::size_t alphabet);

/// 8-bit greyscale raster, row 0 at the top (largest y).
struct GreyImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  /// Binary PGM (P5, maxval 255).
  std::string to_pgm() const;

  friend bool operator==(const GreyImage&, const GreyImage&) = default;
};

/// The region actually drawn for `spec`.
Box render_region(const Configuration& c, const RenderSpec& spec);

/// Rasterises the configuration. The ant is an oriented triangle pointing along its
/// heading, drawn black on light cells and white on dark ones.
GreyImage rasterise(const RuleWord& w, const Configuration& c, const RenderSpec& spec = {});

std::string render_pgm(const RuleWord& w, const Configuration& c, const RenderSpec& spec = {});
std::string render_svg(const RuleWord& w, const Configuration& c, const RenderSpec& spec = {});

/// Renders in spec.format and writes the file.
void save_render(const std::filesystem::path& path, const RuleWord& w, const Configuration& c,
                 const RenderSpec& spec = {});

}  // namespace antlab
