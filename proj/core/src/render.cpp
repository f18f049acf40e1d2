#include "antlab/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "antlab/errors.hpp"

namespace antlab {

std::vector<std::uint8_t> default_palette(std::size_t alphabet) {
  if (alphabet < 2) throw DomainError("palette needs at least two symbols");
  std::vector<std::uint8_t> out(alphabet);
  const auto top = static_cast<std::int64_t>(alphabet - 1);
  for (std::size_t s = 0; s < alphabet; ++s) {
    // Integer form of floor(255 * (1 - s/top)).
    out[s] = static_cast<std::uint8_t>((255 * (top - static_cast<std::int64_t>(s))) / top);
  }
  return out;
}

void check_palette(const std::vector<std::uint8_t>& palette, std::size_t alphabet) {
  if (palette.size() != alphabet) {
    throw DomainError("palette has " + std::to_string(palette.size()) + " entries for " +
                      std::to_string(alphabet) + " symbols");
  }
  if (std::set<std::uint8_t>(palette.begin(), palette.end()).size() != palette.size()) {
    throw DomainError("palette is not injective");
  }
}

std::string GreyImage::to_pgm() const {
  std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.append(pixels.begin(), pixels.end());
  return out;
}

Box render_region(const Configuration& c, const RenderSpec& spec) {
  if (spec.region) return *spec.region;
  Box b{c.position, c.position};
  if (auto nz = c.picture.bounds()) {
    b.expand(nz->min);
    b.expand(nz->max);
  }
  b.min -= Cell{spec.margin, spec.margin};
  b.max += Cell{spec.margin, spec.margin};
  return b;
}

namespace {

std::vector<std::uint8_t> palette_for(const RuleWord& w, const RenderSpec& spec) {
  std::vector<std::uint8_t> p = spec.palette.empty() ? default_palette(w.size()) : spec.palette;
  check_palette(p, w.size());
  return p;
}

void check_geometry(const Box& region, int cell_size) {
  if (cell_size < 1) throw DomainError("cell size must be positive");
  if (region.width() < 1 || region.height() < 1) throw DomainError("empty render region");
  const double pixels = static_cast<double>(region.width()) * region.height() * cell_size * cell_size;
  if (pixels > 4.0e8) throw DomainError("render region too large");
}

// Triangle corners in cell-local units (0..1, y down) for an ant heading `d`.
std::array<std::array<double, 2>, 3> ant_triangle(Direction d) {
  switch (d) {
    case Direction::East: return {{{0.85, 0.5}, {0.15, 0.15}, {0.15, 0.85}}};
    case Direction::North: return {{{0.5, 0.15}, {0.15, 0.85}, {0.85, 0.85}}};
    case Direction::West: return {{{0.15, 0.5}, {0.85, 0.15}, {0.85, 0.85}}};
    default: return {{{0.5, 0.85}, {0.15, 0.15}, {0.85, 0.15}}};
  }
}

bool inside(const std::array<std::array<double, 2>, 3>& t, double x, double y) {
  auto edge = [&](int i, int j) {
    return (t[j][0] - t[i][0]) * (y - t[i][1]) - (t[j][1] - t[i][1]) * (x - t[i][0]);
  };
  const double a = edge(0, 1), b = edge(1, 2), c = edge(2, 0);
  return (a >= 0 && b >= 0 && c >= 0) || (a <= 0 && b <= 0 && c <= 0);
}

}  // namespace

GreyImage rasterise(const RuleWord& w, const Configuration& c, const RenderSpec& spec) {
  const std::vector<std::uint8_t> palette = palette_for(w, spec);
  const Box region = render_region(c, spec);
  const int cs = spec.cell_size;
  check_geometry(region, cs);

  GreyImage img;
  img.width = static_cast<int>(region.width()) * cs;
  img.height = static_cast<int>(region.height()) * cs;
  img.pixels.assign(static_cast<std::size_t>(img.width) * img.height, palette[0]);
  auto fill_cell = [&](Cell cell, std::uint8_t grey) {
    const int col = static_cast<int>(cell.x - region.min.x);
    const int row = static_cast<int>(region.max.y - cell.y);
    for (int dy = 0; dy < cs; ++dy) {
      std::uint8_t* line = &img.pixels[static_cast<std::size_t>(row * cs + dy) * img.width + col * cs];
      std::fill(line, line + cs, grey);
    }
  };
  c.picture.for_each_nonzero([&](Cell cell, std::uint8_t s) {
    if (region.contains(cell)) fill_cell(cell, palette[s]);
  });

  if (spec.ant_marker && region.contains(c.position)) {
    const std::uint8_t under = palette[c.picture.get(c.position)];
    const std::uint8_t ink = under >= 128 ? 0 : 255;
    const int col = static_cast<int>(c.position.x - region.min.x);
    const int row = static_cast<int>(region.max.y - c.position.y);
    if (cs < 3) {
      fill_cell(c.position, ink);
    } else {
      const auto tri = ant_triangle(c.direction);
      for (int dy = 0; dy < cs; ++dy) {
        for (int dx = 0; dx < cs; ++dx) {
          if (inside(tri, (dx + 0.5) / cs, (dy + 0.5) / cs)) {
            img.pixels[static_cast<std::size_t>(row * cs + dy) * img.width + col * cs + dx] = ink;
          }
        }
      }
    }
  }
  return img;
}

std::string render_pgm(const RuleWord& w, const Configuration& c, const RenderSpec& spec) {
  return rasterise(w, c, spec).to_pgm();
}

std::string render_svg(const RuleWord& w, const Configuration& c, const RenderSpec& spec) {
  const std::vector<std::uint8_t> palette = palette_for(w, spec);
  const Box region = render_region(c, spec);
  const int cs = spec.cell_size;
  check_geometry(region, cs);
  auto grey = [](std::uint8_t g) {
    std::ostringstream s;
    s << "rgb(" << int(g) << ',' << int(g) << ',' << int(g) << ')';
    return s.str();
  };

  const std::int64_t width = region.width() * cs;
  const std::int64_t height = region.height() * cs;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" shape-rendering=\"crispEdges\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"" << grey(palette[0]) << "\"/>\n";
  for (const auto& [cell, s] : c.picture.entries()) {
    if (!region.contains(cell)) continue;
    out << "<rect x=\"" << (cell.x - region.min.x) * cs << "\" y=\"" << (region.max.y - cell.y) * cs
        << "\" width=\"" << cs << "\" height=\"" << cs << "\" fill=\"" << grey(palette[s]) << "\"/>\n";
  }
  if (spec.ant_marker && region.contains(c.position)) {
    const double ox = static_cast<double>((c.position.x - region.min.x) * cs);
    const double oy = static_cast<double>((region.max.y - c.position.y) * cs);
    out << "<polygon fill=\"rgb(220,0,0)\" points=\"";
    const auto tri = ant_triangle(c.direction);
    for (std::size_t i = 0; i < tri.size(); ++i) {
      out << (i ? " " : "") << ox + tri[i][0] * cs << ',' << oy + tri[i][1] * cs;
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void save_render(const std::filesystem::path& path, const RuleWord& w, const Configuration& c,
                 const RenderSpec& spec) {
  const std::string data = spec.format == ImageFormat::Pgm ? render_pgm(w, c, spec) : render_svg(w, c, spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << data;
}

}  // namespace antlab
