#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "nchs/text.hpp"
#include "support.hpp"

using nchs::testing::data_path;

namespace {

struct Outcome {
  int status;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int s = nchs::cli::run(args, out, err);
  return {s, out.str(), err.str()};
}

TEST(Cli, MissingFileIsAnInputError) {
  auto r = run({"gamma", "missing.gf"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("missing.gf"), std::string::npos);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"gamma", data_path("dyck.gf"), "--max-deg", "x"}).status, 2);
}

TEST(Cli, IfThenElseExample) {
  auto r = run({"verify-example", "ifthenelse", "--format", "structured"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("p_S=(2*t^2-t)*S^2+(2*t-1)*S+1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("series=1,1,2,3,6,10,20,35\nseries.bound=7\nseries.certified=true\n"), std::string::npos);
}

TEST(Cli, StructuredOutputIsStable) {
  std::vector<std::string> args{"hilbert", data_path("ex2.hs"), "-d", "6", "--format", "structured"};
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  for (const auto& line : nchs::text::split(a.out, '\n'))
    if (!line.empty()) EXPECT_NE(line.find('='), std::string::npos) << line;
}

TEST(Cli, FpexExampleRunsAllCrossChecks) {
  auto r = run({"verify-example", "fpex"});
  EXPECT_EQ(r.status, 0) << r.out << r.err;
  for (const char* check : {"check.prediction: pass", "check.oracle_to_7: pass", "check.leading_ideal_series: pass"})
    EXPECT_NE(r.out.find(check), std::string::npos) << check;
}

TEST(Cli, MismatchExitsWithOne) {
  // the finite part of the prediction is left out
  auto r = run({"gsb", data_path("fpex.pres"), "-d", "6", "--predict", data_path("fpex_predict.gf")});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("check.prediction: FAIL"), std::string::npos);
}

TEST(Cli, ResourceCapExitsWithThree) {
  EXPECT_EQ(run({"oracle", data_path("countex.rel"), "-d", "9", "--cap", "10"}).status, 3);
}

TEST(Cli, Subcommands) {
  EXPECT_EQ(run({"ambiguity", data_path("ambiguous.gf"), "-d", "5"}).status, 0);
  EXPECT_EQ(run({"quotient-grammar", data_path("xstarystar.gf"), "-d", "8"}).status, 0);
  auto g = run({"govorov-chains", data_path("countex_L1.gf"), "-k", "2", "-d", "12"});
  EXPECT_NE(g.out.find("count: 3"), std::string::npos);
  EXPECT_EQ(run({"uchain2", data_path("ex3.hs"), "-d", "8"}).status, 0);
  EXPECT_EQ(run({"uchain2", data_path("ex1.hs")}).status, 2);
  EXPECT_EQ(run({"hilbert", data_path("countex.hs"), "-d", "8", "--verify-chains", "10"}).status, 0);
  EXPECT_EQ(run({"verify-example", "no-such-example"}).status, 2);
}

}  // namespace
