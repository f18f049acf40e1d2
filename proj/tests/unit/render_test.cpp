#include <gtest/gtest.h>

#include <cmath>

#include "antlab/errors.hpp"
#include "antlab/render.hpp"
#include "test_support.hpp"

using namespace antlab;

TEST(Palette, DefaultFormula) {
  for (std::size_t n = 2; n <= 256; ++n) {
    const auto p = default_palette(n);
    ASSERT_EQ(p.size(), n);
    for (std::size_t s = 0; s < n; ++s) {
      const double want = std::floor(255.0 * (1.0 - static_cast<double>(s) / static_cast<double>(n - 1)) + 1e-9);
      ASSERT_EQ(p[s], static_cast<int>(want)) << n << " " << s;
    }
    EXPECT_NO_THROW(check_palette(p, n));
    EXPECT_EQ(p.front(), 255);
    EXPECT_EQ(p.back(), 0);
  }
  EXPECT_EQ(default_palette(4), (std::vector<std::uint8_t>{255, 170, 85, 0}));
}

TEST(Palette, RejectsBadPalettes) {
  EXPECT_THROW(check_palette({255, 0}, 3), DomainError);
  EXPECT_THROW(check_palette({255, 9, 9}, 3), DomainError);
  EXPECT_THROW(default_palette(1), DomainError);
}

TEST(Pgm, HandComputedBytes) {
  Configuration c;
  c.picture.set({0, 0}, 1);
  c.position = {1, 0};
  c.direction = Direction::East;
  RenderSpec spec;
  spec.cell_size = 1;
  spec.margin = 0;
  spec.ant_marker = false;
  const std::string plain = render_pgm(RuleWord::parse("LR"), c, spec);
  EXPECT_EQ(plain, std::string("P5\n2 1\n255\n\x00\xff", 13));
  spec.ant_marker = true;
  EXPECT_EQ(render_pgm(RuleWord::parse("LR"), c, spec), std::string("P5\n2 1\n255\n\x00\x00", 13));
}

TEST(Pgm, RowsRunTopDown) {
  Configuration c;
  c.picture.set({0, 1}, 2);
  RenderSpec spec;
  spec.cell_size = 1;
  spec.margin = 0;
  spec.ant_marker = false;
  const GreyImage img = rasterise(RuleWord::parse("LLR"), c, spec);
  ASSERT_EQ(img.width, 1);
  ASSERT_EQ(img.height, 2);
  EXPECT_EQ(img.at(0, 0), 0);    // y = 1, symbol 2
  EXPECT_EQ(img.at(0, 1), 255);  // y = 0, ant cell, symbol 0
}

TEST(Pgm, AntTrianglePointsAlongHeading) {
  Configuration c;
  RenderSpec spec;
  spec.cell_size = 9;
  spec.margin = 0;
  for (Direction d : {Direction::East, Direction::North, Direction::West, Direction::South}) {
    c.direction = d;
    const GreyImage img = rasterise(RuleWord::parse("LR"), c, spec);
    // Ink near the edge the ant faces is narrower than near the opposite edge.
    auto ink = [&](int x, int y) { return img.at(x, y) == 0 ? 1 : 0; };
    int front = 0, back = 0;
    for (int i = 0; i < 9; ++i) {
      switch (d) {
        case Direction::East: front += ink(7, i); back += ink(1, i); break;
        case Direction::West: front += ink(1, i); back += ink(7, i); break;
        case Direction::North: front += ink(i, 1); back += ink(i, 7); break;
        case Direction::South: front += ink(i, 7); back += ink(i, 1); break;
      }
    }
    EXPECT_LT(front, back) << direction_letter(d);
    EXPECT_GT(front, 0);
  }
}

TEST(Pgm, GoldenLrOnset) {
  const RuleWord w = RuleWord::parse("LR");
  const Configuration c = run(w, Configuration{}, 11'000).configuration;
  RenderSpec spec;
  spec.cell_size = 2;
  const std::string golden = testsupport::read_file(std::string(ANTLAB_GOLDEN_DIR) + "/lr_11000.pgm");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(render_pgm(w, c, spec), golden);
}

TEST(Pgm, LlrrIsMirrorSymmetric) {
  const RuleWord w = RuleWord::parse("LLRR");
  const Configuration c = run(w, Configuration{}, 817'888).configuration;
  RenderSpec spec;
  spec.cell_size = 1;
  spec.ant_marker = false;
  const GreyImage img = rasterise(w, c, spec);
  ASSERT_GT(img.height, 50);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) ASSERT_EQ(img.at(x, y), img.at(x, img.height - 1 - y)) << x << "," << y;
  }
}

TEST(Svg, GoldenAndStructure) {
  const RuleWord w = RuleWord::parse("LLR");
  const Configuration c = run(w, Configuration{}, 40).configuration;
  RenderSpec spec;
  spec.format = ImageFormat::Svg;
  spec.cell_size = 10;
  const std::string svg = render_svg(w, c, spec);
  EXPECT_EQ(svg, testsupport::read_file(std::string(ANTLAB_GOLDEN_DIR) + "/llr_40.svg"));
  std::size_t rects = 0;
  for (std::size_t at = svg.find("<rect"); at != std::string::npos; at = svg.find("<rect", at + 1)) ++rects;
  EXPECT_EQ(rects, c.picture.nonzero_count() + 1);
  EXPECT_NE(svg.find("<polygon"), std::string::npos);
}

TEST(Render, ExplicitRegionClips) {
  const RuleWord w = RuleWord::parse("LR");
  const Configuration c = run(w, Configuration{}, 500).configuration;
  RenderSpec spec;
  spec.region = Box{{-2, -2}, {2, 2}};
  spec.cell_size = 3;
  const GreyImage img = rasterise(w, c, spec);
  EXPECT_EQ(img.width, 15);
  EXPECT_EQ(img.height, 15);
  spec.cell_size = 0;
  EXPECT_THROW(rasterise(w, c, spec), DomainError);
}
