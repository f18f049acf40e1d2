#include <gtest/gtest.h>

#include "antlab/detect.hpp"
#include "antlab/highway.hpp"

using namespace antlab;

TEST(Detect, LrWhiteStart) {
  const DetectionReport r = detect(RuleWord::parse("LR"), Configuration{}, {});
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.period, 104u);
  EXPECT_EQ(std::abs(r.drift.x), 2);
  EXPECT_EQ(std::abs(r.drift.y), 2);
  EXPECT_LE(r.preperiod_bound, r.steps_simulated);
  ASSERT_TRUE(r.highway.has_value());
  EXPECT_TRUE(verify_highway(*r.highway).accepted);
}

TEST(Detect, LlrlPreperiodNearOnset) {
  DetectOptions o;
  o.max_steps = 300'000;
  const DetectionReport r = detect(RuleWord::parse("LLRL"), Configuration{}, o);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.period, 384u);
  EXPECT_GE(r.preperiod_bound, 256'100u);
  EXPECT_LE(r.preperiod_bound, 256'100u + o.max_period);
  EXPECT_EQ(r.preperiod_bound + 3 * r.period, r.detected_at);
}

TEST(Detect, PreperiodBoundIsReallyPeriodicFromThere) {
  // Oracle: from preperiod_bound on, the trace is r.period-periodic for a long stretch.
  const RuleWord w = RuleWord::parse("LLRL");
  DetectOptions o;
  o.max_steps = 300'000;
  const DetectionReport r = detect(w, Configuration{}, o);
  ASSERT_TRUE(r.found());
  const RunResult run_r = run(w, Configuration{}, r.preperiod_bound + 20 * r.period);
  for (std::size_t i = r.preperiod_bound; i + r.period < run_r.trace.size(); ++i) {
    ASSERT_EQ(run_r.trace[i], run_r.trace[i + r.period]) << i;
  }
}

TEST(Detect, LlrrHasNoHighway) {
  DetectOptions o;
  o.max_steps = 1'000'000;
  const DetectionReport r = detect(RuleWord::parse("LLRR"), Configuration{}, o);
  EXPECT_FALSE(r.found());
  EXPECT_EQ(r.steps_simulated, 1'000'000u);
  EXPECT_LE(r.preperiod_bound, r.steps_simulated);
}

TEST(Detect, AgreesWithVerifierAtDetectionPoint) {
  for (const char* word : {"LR", "LLR", "LLLLR", "LLLLLLR"}) {
    const RuleWord w = RuleWord::parse(word);
    const DetectionReport r = detect(w, Configuration{}, {});
    ASSERT_TRUE(r.found()) << word;
    const Configuration at = run(w, Configuration{}, r.detected_at).configuration;
    const Highway h = to_highway(w, extract_candidate(w, at, r.period));
    EXPECT_TRUE(verify_highway(h).accepted) << word;
    EXPECT_EQ(h.drift, r.drift) << word;
    EXPECT_TRUE(smaller_verifying_periods(h).empty()) << word;
  }
}

TEST(Detect, Deterministic) {
  const DetectionReport a = detect(RuleWord::parse("LLRL"), Configuration{}, {});
  const DetectionReport b = detect(RuleWord::parse("LLRL"), Configuration{}, {});
  EXPECT_EQ(a.detected_at, b.detected_at);
  EXPECT_EQ(a.highway, b.highway);
}

TEST(Detect, StepBudgetTooSmall) {
  DetectOptions o;
  o.max_steps = 5000;
  const DetectionReport r = detect(RuleWord::parse("LR"), Configuration{}, o);
  EXPECT_FALSE(r.found());
  EXPECT_EQ(r.steps_simulated, 5000u);
}
