#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "antlab/catalog.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

// Runs the tool with stdout captured and stderr sent to `err` when given.
Result antlab_cli(const std::string& args, const fs::path& err = {}) {
  std::string cmd = std::string(ANTLAB_CLI) + " " + args;
  cmd += err.empty() ? " 2>/dev/null" : " 2>" + err.string();
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("antlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ConstructL6RFundamentalThenVerify) {
  const Result c = antlab_cli("construct --family l2kr --k 3 --variant fundamental --out " + path("k3.json"));
  ASSERT_EQ(c.status, 0);
  EXPECT_NE(c.out.find("period=50"), std::string::npos);
  const auto records = antlab::load_catalog(path("k3.json"));
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].highway.period, 50u);
  EXPECT_TRUE(records[0].provenance.constructed());
  const Result v = antlab_cli("verify " + path("k3.json"));
  EXPECT_EQ(v.status, 0);
  EXPECT_NE(v.out.find("verdict=accept"), std::string::npos);
}

TEST_F(Cli, ConstructLlrlrlFiveLinks) {
  ASSERT_EQ(antlab_cli("construct --family llrlrl --n 5 --out " + path("n5.json")).status, 0);
  EXPECT_EQ(antlab::load_catalog(path("n5.json")).at(0).highway.period, 340u);
  EXPECT_EQ(antlab_cli("verify " + path("n5.json")).status, 0);
}

TEST_F(Cli, ConstructToStdout) {
  const Result r = antlab_cli("construct --family l2kr --k 2 --variant all");
  ASSERT_EQ(r.status, 0);
  const auto records = antlab::catalog_from_json(r.out);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].highway.period, 34u);
  EXPECT_EQ(records[1].highway.period, 68u);
}

TEST_F(Cli, VerifyRejectsTamperedRecord) {
  ASSERT_EQ(antlab_cli("construct --family l2kr --k 3 --out " + path("k3.json")).status, 0);
  auto records = antlab::load_catalog(path("k3.json"));
  records[0].highway.drift = {1, 1};
  antlab::save_catalog(path("bad.json"), records);
  const Result v = antlab_cli("verify " + path("bad.json"), path("err.txt"));
  EXPECT_EQ(v.status, 1);
  EXPECT_NE(v.out.find("verdict=reject"), std::string::npos);
  EXPECT_NE(testsupport::read_file(path("err.txt")).find("pose"), std::string::npos);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(antlab_cli("").status, 2);
  EXPECT_EQ(antlab_cli("frobnicate").status, 2);
  EXPECT_EQ(antlab_cli("construct --family spiral").status, 2);
  EXPECT_EQ(antlab_cli("construct --family l2kr").status, 2);
  EXPECT_EQ(antlab_cli("construct --family l2kr --k 3 --variant 9").status, 2);
  EXPECT_EQ(antlab_cli("simulate LR --steps 10").status, 2);
  EXPECT_EQ(antlab_cli("simulate LXR --white --steps 10").status, 2);
  EXPECT_EQ(antlab_cli("census LR --runs 1 --steps 10").status, 2);
  EXPECT_EQ(antlab_cli("verify").status, 2);
  EXPECT_EQ(antlab_cli("--help").status, 0);
}

TEST_F(Cli, ZeroStepsLeavesInputUnchanged) {
  const std::string text = "antpat 1 LLRL\nant 1 -2 S\n0 -3 3\n-4 0 1\n2 0 2\n";
  {
    std::ofstream f(path("in.antpat"), std::ios::binary);
    f << text;
  }
  const Result r = antlab_cli("simulate --in " + path("in.antpat") + " --steps 0 --out " + path("out.antpat"));
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(testsupport::read_file(path("out.antpat")), text);
  EXPECT_NE(r.out.find("nonzero=3"), std::string::npos);
}

TEST_F(Cli, SimulateWritesRenders) {
  ASSERT_EQ(antlab_cli("simulate LR --white --steps 11000 --render " + path("lr.pgm") + " --cell-size 2").status, 0);
  EXPECT_EQ(testsupport::read_file(path("lr.pgm")),
            testsupport::read_file(std::string(ANTLAB_GOLDEN_DIR) + "/lr_11000.pgm"));
  ASSERT_EQ(antlab_cli("simulate LLR --white --steps 40 --render " + path("llr.svg") + " --cell-size 10").status, 0);
  EXPECT_EQ(testsupport::read_file(path("llr.svg")),
            testsupport::read_file(std::string(ANTLAB_GOLDEN_DIR) + "/llr_40.svg"));
}

TEST_F(Cli, SimulateMissingInputFails) {
  EXPECT_EQ(antlab_cli("simulate --in " + path("nope.antpat") + " --steps 1").status, 1);
}

TEST_F(Cli, DetectWritesCatalogRecord) {
  const Result r = antlab_cli("detect LR --white --out " + path("lr.json"));
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("outcome=highway period=104"), std::string::npos);
  const auto records = antlab::load_catalog(path("lr.json"));
  ASSERT_EQ(records.size(), 1u);
  EXPECT_GT(records[0].provenance.steps_to_detect, 0u);
  EXPECT_EQ(antlab_cli("verify " + path("lr.json")).status, 0);
}

TEST_F(Cli, CensusHonoursWorkerEnvironment) {
  const std::string args = "census LLLLR --runs 40 --seed 3 --out " + path("c.json") + " --csv " + path("c.csv");
  ASSERT_EQ(antlab_cli(args).status, 0);
  const std::string one = testsupport::read_file(path("c.json"));
  ASSERT_EQ(antlab_cli("census LLLLR --runs 40 --seed 3 --out " + path("d.json")).status, 0);
  setenv("ANTLAB_WORKERS", "3", 1);
  const Result r = antlab_cli("census LLLLR --runs 40 --seed 3 --out " + path("e.json"));
  unsetenv("ANTLAB_WORKERS");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("highway_runs=40"), std::string::npos);
  auto strip = [](std::string s) { return s.substr(0, s.find("\"metadata\"")); };
  EXPECT_EQ(strip(one), strip(testsupport::read_file(path("e.json"))));
  EXPECT_EQ(testsupport::read_file(path("c.csv")).rfind("period,count,frequency\n", 0), 0u);
}

TEST_F(Cli, MineKeepsRequestedPeriods) {
  const Result r = antlab_cli("mine LLLLR --runs 30 --period 68 --out " + path("m.json"));
  ASSERT_EQ(r.status, 0);
  const auto records = antlab::load_catalog(path("m.json"));
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].highway.period, 68u);
  EXPECT_FALSE(records[0].provenance.constructed());
  EXPECT_EQ(antlab_cli("verify " + path("m.json")).status, 0);
}
