#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace avoidance::cli {
namespace {

using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scene(const std::string& name) { return std::string(AVOIDANCE_SCENE_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("avoidance_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

class SeedEnv : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("AVOIDANCE_SEED"); }
  void TearDown() override { unsetenv("AVOIDANCE_SEED"); }
};

TEST(Cli, GpCheck) {
  const auto r = run({"gp-check", scene("standard4.scene")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["general_position"].get<bool>());
  EXPECT_EQ(j["triples"].size(), 4u);
}

TEST(Cli, Diagonals) {
  const auto r = run({"diagonals", scene("standard4.scene")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["count"], 3);
  std::set<std::string> lines;
  for (const auto& d : j["diagonals"]) lines.insert(d["line"].get<std::string>());
  EXPECT_EQ(lines, (std::set<std::string>{"z1 + z2 = 0", "z1 + z3 = 0", "z2 + z3 = 0"}));
}

TEST(Cli, ClassifyConstantCase) {
  const auto r = run({"classify", scene("constant_case.scene")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "AllCurvesConstant");
  ASSERT_EQ(j["evidence"].size(), 6u);
  for (const auto& t : j["evidence"]) EXPECT_EQ(t["rank"], 6);
  EXPECT_FALSE(j.contains("witness"));
}

TEST(Cli, ClassifyWitnessCase) {
  const auto r = run({"classify", scene("witness_case.scene")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "WitnessExists");
  EXPECT_TRUE(j.contains("witness"));
  EXPECT_EQ(j["report"]["projection_constant"], false);
}

TEST(Cli, ClassifyObstructedCaseExitsWithConstructionFailure) {
  const auto r = run({"classify", scene("diagonal_obstruction.scene")});
  EXPECT_EQ(r.code, kConstructionFailed);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "WitnessExists");
  EXPECT_TRUE(j.contains("obstruction"));
}

TEST(Cli, WitnessOptimalityIsAllExact) {
  const auto r = run({"witness", scene("optimality.scene"), "--theorem", "opt"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["curve"], "(1, exp(z), -exp(z))");
  for (const auto& s : j["report"]["sets"]) EXPECT_EQ(s["method"], "exact");
}

TEST(Cli, WitnessTheorems) {
  EXPECT_EQ(run({"witness", scene("thm2i.scene"), "--theorem", "2i"}).code, 0);
  EXPECT_EQ(run({"witness", scene("standard4.scene"), "--theorem", "2ii"}).code, 0);
  EXPECT_EQ(run({"witness", scene("witness_case.scene"), "--theorem", "3.2"}).code, 0);
  EXPECT_EQ(run({"witness", scene("witness_case.scene"), "--theorem", "3.2", "--pair", "1,3"}).code, 0);
  EXPECT_EQ(run({"witness", scene("diagonal_obstruction.scene"), "--theorem", "3.2"}).code, kConstructionFailed);
  EXPECT_EQ(run({"witness", scene("constant_case.scene"), "--theorem", "3.2"}).code, kInputError);
  EXPECT_EQ(run({"witness", scene("standard4.scene"), "--theorem", "7"}).code, kInputError);
  EXPECT_EQ(run({"witness", scene("standard4.scene"), "--theorem", "2i"}).code, kInputError);
}

TEST(Cli, WitnessExponentOverride) {
  const auto r = run({"witness", scene("standard4.scene"), "--theorem", "2ii", "--exponent", "i*z"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["curve"], "(exp(i*z), -exp(i*z), exp(2i*z))");
  // With z^2 the curve gets within e^-100 (relative) of H inside the disk.
  const auto close = run({"witness", scene("standard4.scene"), "--theorem", "2ii", "--exponent", "z^2"});
  EXPECT_EQ(close.code, kVerificationFailed);
  EXPECT_EQ(run({"witness", scene("standard4.scene"), "--theorem", "2ii", "--exponent", "3"}).code, kInputError);
}

TEST(Cli, VerifyViolationExitsOne) {
  const auto r = run({"verify", scene("violation.scene"), "--curve", "f"});
  EXPECT_EQ(r.code, kVerificationFailed);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["sets"][0]["verdict"], "violated");
  EXPECT_TRUE(j["sets"][0]["violation_sample"].is_array());
}

TEST(Cli, HumanOutput) {
  const auto r = run({"--human", "verify", scene("thm2ii.scene"), "--curve", "f"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("exact avoided"), std::string::npos);
  EXPECT_NE(r.out.find("sampled avoided"), std::string::npos);
  const auto trailing = run({"verify", scene("thm2ii.scene"), "--curve", "f", "--human"});
  EXPECT_EQ(trailing.out, r.out);
  EXPECT_NE(run({"verify", scene("thm2ii.scene"), "--curve", "f", "--human", "--json"}).code, 0);
}

TEST(Cli, Project) {
  const auto r = run({"project", scene("thm2ii.scene"), "--curve", "f", "--at", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_NEAR(j["point"][2][0].get<double>(), std::exp(1.0), 1e-12);
  EXPECT_EQ(j["projection_constant"], false);
  EXPECT_EQ(run({"project", scene("thm2ii.scene"), "--curve", "f", "--at", "1 +"}).code, kInputError);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({}).code, kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, kInputError);
  EXPECT_EQ(run({"verify", scene("thm2ii.scene")}).code, kInputError);
  EXPECT_EQ(run({"verify", scene("thm2ii.scene"), "--curve", "nope"}).code, kInputError);
  EXPECT_EQ(run({"gp-check", "/nonexistent.scene"}).code, kInputError);
  const auto bad = write_temp("bad.scene", "hyperplane H: z1 + = 0\n");
  const auto r = run({"gp-check", bad});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("line 1, column"), std::string::npos) << r.err;
  EXPECT_EQ(run({"verify", scene("thm2ii.scene"), "--curve", "f", "--radius", "-1"}).code, kInputError);
}

TEST_F(SeedEnv, ByteIdenticalReports) {
  const auto a = run({"verify", scene("thm2ii.scene"), "--curve", "f", "--seed", "5"});
  const auto b = run({"verify", scene("thm2ii.scene"), "--curve", "f", "--seed", "5", "--workers", "3"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(SeedEnv, EnvironmentSeedAndPrecedence) {
  const auto base = run({"verify", scene("thm2ii.scene"), "--curve", "f", "--seed", "9"});
  const auto other = run({"verify", scene("thm2ii.scene"), "--curve", "f", "--seed", "0"});
  ASSERT_NE(base.out, other.out);
  setenv("AVOIDANCE_SEED", "9", 1);
  EXPECT_EQ(run({"verify", scene("thm2ii.scene"), "--curve", "f"}).out, base.out);
  EXPECT_EQ(run({"verify", scene("thm2ii.scene"), "--curve", "f", "--seed", "0"}).out, other.out);
  setenv("AVOIDANCE_SEED", "nine", 1);
  EXPECT_EQ(run({"verify", scene("thm2ii.scene"), "--curve", "f"}).code, kInputError);
}

}  // namespace
}  // namespace avoidance::cli
