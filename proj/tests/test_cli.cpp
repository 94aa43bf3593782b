#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kohler_sqs/cli.hpp"
#include "kohler_sqs/design_json.hpp"

using namespace kohler;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("kohler_cli_test_" + name);
}

void write_file(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(CliConstruct, WritesDesignToStdout) {
  const CliRun r = run({"construct", "--group", "2,2,5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("blocks").size(), 285u);
  EXPECT_EQ(j.at("group"), json::array({2, 10}));
}

TEST(CliConstruct, FailureAndInvalidOrders) {
  const CliRun z8 = run({"construct", "--group", "8"});
  EXPECT_EQ(z8.code, 2);
  EXPECT_TRUE(z8.out.empty());
  EXPECT_NE(z8.err.find("isolated vertex"), std::string::npos);
  EXPECT_NE(z8.err.find("witness_component"), std::string::npos);

  const CliRun z7 = run({"construct", "--group", "7"});
  EXPECT_EQ(z7.code, 1);
  EXPECT_NE(z7.err.find("odd"), std::string::npos);
  EXPECT_EQ(run({"construct", "--group", "12"}).code, 1);
}

TEST(CliConstruct, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"construct"}).code, 1);
  EXPECT_EQ(run({"construct", "--group", "3,1"}).code, 1);
  EXPECT_EQ(run({"construct", "--group", "10", "--bogus"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"construct", "--group", "10", "--h0", "2"}).code, 1);
  EXPECT_EQ(run({"construct", "--group", "10", "--h0", "x"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliConstruct, H0OverrideAndOutFile) {
  const auto path = temp_path("h0.json");
  const CliRun r = run({"construct", "--group", "2,2,5", "--h0", "1,0", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  EXPECT_EQ(j.at("h0"), json::array({1, 0}));
  EXPECT_EQ(j.at("blocks").size(), 285u);
  std::filesystem::remove(path);
}

TEST(CliVerify, RoundTripAndViolations) {
  const auto path = temp_path("z44.json");
  ASSERT_EQ(run({"construct", "--group", "4,4", "--out", path.string()}).code, 0);
  const CliRun ok = run({"verify", path.string()});
  EXPECT_EQ(ok.code, 0) << ok.out;
  const json report = json::parse(ok.out);
  EXPECT_TRUE(report.at("is_sqs").get<bool>());
  EXPECT_TRUE(report.at("is_reversible").get<bool>());

  json d;
  {
    std::ifstream in(path);
    d = json::parse(in);
  }
  d["blocks"].erase(d["blocks"].size() - 1);
  d["provenance"].erase(d["provenance"].size() - 1);
  write_file(path, d.dump());
  const CliRun bad = run({"verify", path.string()});
  EXPECT_EQ(bad.code, 3);
  EXPECT_EQ(json::parse(bad.out).at("triple_coverage_violations").size(), 4u);

  write_file(path, "this is not json");
  EXPECT_EQ(run({"verify", path.string()}).code, 1);
  EXPECT_EQ(run({"verify", temp_path("missing.json").string()}).code, 1);
  std::filesystem::remove(path);
}

TEST(CliVerify, Sqs20Fixtures) {
  const CliRun completed = run({"verify", std::string(KOHLER_FIXTURE_DIR) + "/sqs20_z2z2z5_completed.json"});
  EXPECT_EQ(completed.code, 0);
  EXPECT_FALSE(json::parse(completed.out).at("contains_b0").get<bool>());
  const CliRun printed = run({"verify", std::string(KOHLER_FIXTURE_DIR) + "/sqs20_z2z2z5_printed.json"});
  EXPECT_EQ(printed.code, 3);
  EXPECT_EQ(json::parse(printed.out).at("triple_coverage_violations").size(), 80u);
}

TEST(CliGraph, Stats) {
  const json z44 = json::parse(run({"graph", "--group", "4,4", "--stats"}).out);
  EXPECT_EQ(z44.at("V"), 8);
  EXPECT_EQ(z44.at("E"), 12);
  EXPECT_EQ(z44.at("degrees"), json({{"3", 8}}));
  const json z10 = json::parse(run({"graph", "--group", "10", "--stats"}).out);
  EXPECT_EQ(z10.at("V"), 2);
  EXPECT_EQ(z10.at("E"), 1);
  const json z16 = json::parse(run({"graph", "--group", "16"}).out);
  EXPECT_GE(z16.at("isolated").get<int>(), 1);
}

TEST(CliGraph, ExportAndUsage) {
  const CliRun r = run({"graph", "--group", "10", "--export"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("vertices").size(), 2u);
  EXPECT_EQ(j.at("edges")[0].at("endpoints"), json::array({0, 1}));
  EXPECT_EQ(run({"graph", "--group", "10", "--export", "--stats"}).code, 1);
  EXPECT_EQ(run({"graph"}).code, 1);
}

TEST(CliExists, Verdicts) {
  const CliRun z8 = run({"exists", "--group", "8"});
  EXPECT_EQ(z8.code, 2);
  EXPECT_EQ(json::parse(z8.out).at("verdict"), "No");
  EXPECT_EQ(run({"exists", "--group", "7"}).code, 1);
  const CliRun g24 = run({"exists", "--group", "2,4"});
  EXPECT_EQ(g24.code, 0);
  EXPECT_EQ(json::parse(g24.out).at("verdict"), "Yes");
  const CliRun g225 = run({"exists", "--group", "2,2,5"});
  EXPECT_TRUE(g225.code == 0 || g225.code == 4);
  EXPECT_EQ(json::parse(g225.out).contains("witness"), g225.code == 0);
}

TEST(CliCount, Examples) {
  const json z10 = json::parse(run({"count", "--group", "10"}).out);
  EXPECT_EQ(z10.at("b0_size"), 20);
  EXPECT_EQ(z10.at("special_triples"), 80);
  EXPECT_TRUE(z10.at("agree").get<bool>());
  const json z44 = json::parse(run({"count", "--group", "4,4"}).out);
  EXPECT_EQ(z44.at("b0_size"), 76);
  EXPECT_EQ(z44.at("special_triples"), 304);
  EXPECT_EQ(z44.at("enumeration_values").at("b0_size"), 76);
  EXPECT_TRUE(z44.at("agree").get<bool>());
  EXPECT_EQ(run({"count", "--group", "12"}).code, 1);
  const json h0 = json::parse(run({"count", "--group", "4,4", "--h0", "[2,0]"}).out);
  EXPECT_EQ(h0.at("h0"), json::array({2, 0}));
  EXPECT_TRUE(h0.at("agree").get<bool>());
}

TEST(CliCapacity, EnvironmentOverride) {
  ::setenv("KOHLER_SQS_MAX_V", "12", 1);
  const CliRun small = run({"graph", "--group", "16"});
  EXPECT_EQ(small.code, 1);
  EXPECT_NE(small.err.find("capacity"), std::string::npos);
  EXPECT_EQ(run({"graph", "--group", "10"}).code, 0);
  ::setenv("KOHLER_SQS_MAX_V", "lots", 1);
  EXPECT_EQ(run({"graph", "--group", "10"}).code, 1);
  ::unsetenv("KOHLER_SQS_MAX_V");
  EXPECT_EQ(capacity_limit(), kDefaultCapacity);
  EXPECT_EQ(run({"graph", "--group", "16"}).code, 0);
}

TEST(CliDeterminism, RepeatedRunsAreByteIdentical) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"construct", "--group", "2,2,5"}, {"graph", "--group", "4,4", "--export"}, {"exists", "--group", "20"},
           {"count", "--group", "14"}}) {
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}
