#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "skein/cli.hpp"

using nlohmann::json;
namespace cli = skein::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "skein");
  ::testing::internal::CaptureStdout();
  const int code = cli::run(args);
  return {code, ::testing::internal::GetCapturedStdout()};
}

}  // namespace

TEST(Cli, HomflyTrefoil) {
  const CliRun r = run({"homfly", "BR[2; 1 1 1]"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["fdeg"], 3);
  EXPECT_EQ(j["braid"], "BR[2; 1 1 1]");
  EXPECT_EQ(j["link"]["lk"], json::parse("[[3]]"));
}

TEST(Cli, OutputIsDeterministic) {
  const CliRun a = run({"colored", "hopf", "--colors", "2;1,1"});
  const CliRun b = run({"colored", "hopf", "--colors", "2;1,1"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, KashaevDeterminant) {
  const CliRun r = run({"kashaev", "BR[2; 1 1 1]", "--N", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(json::parse(r.out)["value"]["abs"].get<double>(), 3.0, 1e-12);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"reduced", "t24", "--colors", "1;1", "--cut", "2"}).code, 0);
  EXPECT_EQ(run({"msl", "hopf", "--m", "2", "--colors", "1,2"}).code, 0);
  const CliRun lg = run({"lg", "trefoil", "--m", "2", "--a", "1"});
  ASSERT_EQ(lg.code, 0);
  EXPECT_TRUE(json::parse(lg.out)["paths_agree"].get<bool>());
  const CliRun al = run({"alexander", "figure8"});
  ASSERT_EQ(al.code, 0);
  EXPECT_TRUE(json::parse(al.out).contains("conway"));
  EXPECT_EQ(run({"alexander", "hopf"}).code, 0);
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"frobnicate"}, {"homfly", "BR[2; 3]"}, {"homfly", "BR[2 1"}, {"colored", "hopf", "--colors", "1,2"},
           {"reduced", "hopf", "--colors", "1", "--cut", "3"}, {"kashaev", "trefoil"}, {"verify", "nope"}}) {
    const CliRun r = run(args);
    EXPECT_EQ(r.code, cli::kExitUsage) << args[0];
    const json j = json::parse(r.out);
    EXPECT_EQ(j["error"]["kind"], "UsageError") << r.out;
  }
}

TEST(Cli, ComputationErrorsCarryTheirKind) {
  const CliRun r = run({"colored", "figure8", "--colors", "2,2"});
  EXPECT_EQ(r.code, cli::kExitComputation);
  EXPECT_EQ(json::parse(r.out)["error"]["kind"], "BudgetError");
}

TEST(Cli, VerifySuiteWithoutTimings) {
  const CliRun r = run({"verify", "skein"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(r.out.find("\"seconds\""), std::string::npos);
  EXPECT_EQ(run({"verify", "skein"}).out, r.out);
}

TEST(Cli, WritesToFile) {
  const std::string path = ::testing::TempDir() + "skein_cli_out.json";
  const CliRun r = run({"--out", path, "homfly", "unknot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const json j = json::parse(f);
  EXPECT_EQ(j["fdeg"], 0);
  std::remove(path.c_str());
}
