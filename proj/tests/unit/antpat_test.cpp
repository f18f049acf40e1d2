#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "antlab/antpat.hpp"
#include "antlab/errors.hpp"
#include "test_support.hpp"

using namespace antlab;

TEST(Antpat, WritesTheDocumentedLayout) {
  Configuration c;
  c.picture.set({2, 0}, 1);
  c.picture.set({-1, 0}, 2);
  c.picture.set({5, -3}, 1);
  c.position = {0, 1};
  c.direction = Direction::West;
  EXPECT_EQ(write_antpat(RuleWord::parse("LLR"), c),
            "antpat 1 LLR\n"
            "ant 0 1 W\n"
            "5 -3 1\n"
            "-1 0 2\n"
            "2 0 1\n");
}

TEST(Antpat, RoundTripIsByteIdentical) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const RuleWord w = RuleWord::parse(testsupport::random_word(rng, 9));
    const Configuration start = testsupport::random_configuration(rng, w.size(), 4);
    const Configuration c = run(w, start, 5000).configuration;
    const std::string text = write_antpat(w, c);
    const AntpatDocument doc = read_antpat(text);
    EXPECT_EQ(doc.rule, w);
    EXPECT_EQ(doc.configuration, c);
    EXPECT_EQ(write_antpat(doc.rule, doc.configuration), text);
  }
}

TEST(Antpat, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "antlab_roundtrip.antpat";
  Configuration c;
  c.picture.set({-7, 9}, 3);
  c.direction = Direction::South;
  save_antpat(path, RuleWord::parse("LRRL"), c);
  const AntpatDocument doc = load_antpat(path);
  EXPECT_EQ(doc.configuration, c);
  std::filesystem::remove(path);
}

TEST(Antpat, RejectsSymbolsOutsideAlphabet) {
  EXPECT_THROW(read_antpat("antpat 1 LR\nant 0 0 N\n0 0 2\n"), ParseError);
  EXPECT_THROW(read_antpat("antpat 1 LR\nant 0 0 N\n0 0 -1\n"), ParseError);
  EXPECT_NO_THROW(read_antpat("antpat 1 LLR\nant 0 0 N\n0 0 2\n"));
}

TEST(Antpat, RejectsMalformedInput) {
  EXPECT_THROW(read_antpat(""), ParseError);
  EXPECT_THROW(read_antpat("antpat 2 LR\nant 0 0 N\n"), ParseError);
  EXPECT_THROW(read_antpat("antpat 1 LR\nant 0 0 X\n"), ParseError);
  EXPECT_THROW(read_antpat("antpat 1 LR\nant 0 zero N\n"), ParseError);
  EXPECT_THROW(read_antpat("antpat 1 LR\nant 0 0 N\n1 1\n"), ParseError);
  EXPECT_THROW(read_antpat("antpat 1 LR\nant 0 0 N\n1 1 1\n1 1 1\n"), ParseError);
  EXPECT_THROW(read_antpat("antpat 1 LQ\nant 0 0 N\n"), ParseError);
}
