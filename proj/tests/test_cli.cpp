#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "trilie/cli.hpp"

using namespace trilie;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Bracket) {
  const CliRun r = run({"bracket", "d1", "x1*d2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "d2\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, DecomposeShiftIsIdentity) {
  const CliRun r = run({"--format", "json", "decompose", "[0, 1]"});
  ASSERT_EQ(r.code, 0) << r.err;
  const CliRun id = run({"--format", "json", "decompose", "[0, 0]"});
  EXPECT_EQ(r.out, id.out);
  EXPECT_NE(r.out.find("\"t\":[\"1\",\"1\"]"), std::string::npos);
}

TEST(Cli, CommasInsideArguments) {
  EXPECT_EQ(run({"--n", "2", "conjugate", "[0, x1^2]", "d1"}).out, "d1 - 2*x1*d2\n");
  EXPECT_EQ(run({"log", "[0, x1^2]"}).out, "x1^2*d2\n");
}

TEST(Cli, ReconstructTakesSeveralFrames) {
  const CliRun r = run({"reconstruct", "d1 - 2*x1*d2", "d2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "[0, x1^2]\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"bracket", "d1 +", "d2"}).code, 1);
  EXPECT_EQ(run({"log", "[0, x1; 2, 1]"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  const CliRun bad = run({"ideal", "x1*d2", "w + w^2"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find(" at ["), std::string::npos);
  EXPECT_TRUE(bad.out.empty());
}

TEST(Cli, SeriesOrderExit) {
  const CliRun r = run({"--order", "2", "act",
                     R"({"form":"B","n":2,"t":["1","1"],"tau":{"a":["0","0"],"lambda":["1","1"]},"s":[],"f":{"coeffs":{"0":"1","2":"1"},"order":2},"e":[]})",
                     "x1^5*d2"});
  EXPECT_EQ(r.code, 4) << r.out << r.err;
}

TEST(Cli, Centre) {
  EXPECT_EQ(run({"--n", "3", "center"}).out, "d3\n");
}

TEST(Cli, Ordinals) {
  EXPECT_EQ(run({"ord", "d1"}).out, "w*1 + 1\n");
  EXPECT_EQ(run({"ideal", "d2", "1"}).out, "true\n");
  EXPECT_EQ(run({"ideal", "d1", "w"}).out, "false\n");
}

TEST(Cli, Deterministic) {
  const CliRun a = run({"verify", "--suite", "dsl", "--seed", "42"});
  const CliRun b = run({"verify", "--suite", "dsl", "--seed", "42"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
