#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "szego_lab/cli.hpp"

using namespace szego_lab;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "szego_lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir(const std::string& name) {
  const auto d = std::filesystem::temp_directory_path() / ("szego_lab_cli_" + name);
  std::filesystem::remove_all(d);
  std::filesystem::create_directories(d);
  return d;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, VerifyTheoremIdentity) {
  const auto dir = temp_dir("theorem");
  const CliRun r = cli({"verify", "theorem", "--curve", "disk", "--weight", "const", "--p", "2", "--n-max", "4",
                     "--out-dir", dir.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const std::string csv = slurp(dir / "report.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kCsvHeader);
  const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  EXPECT_EQ(summary["totals"]["rows"], 5);
  EXPECT_TRUE(summary["failures"].empty());
}

TEST(Cli, SolveSzegoA) {
  const CliRun r = cli({"solve", "--curve", "disk", "--weight", "szego_a", "--a", "0.5,0", "--p", "2", "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["coefficients"].size(), 2u);
  EXPECT_NEAR(j["coefficients"][0][0].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(j["coefficients"][0][1].get<double>(), 0.0, 1e-9);
  EXPECT_NEAR(j["coefficients"][1][0].get<double>(), -0.5, 1e-9);
  EXPECT_NEAR(j["coefficients"][1][1].get<double>(), 0.0, 1e-9);
  EXPECT_LE(j["m"].get<double>(), 1e-9);
}

TEST(Cli, ASelectsCurveUnlessWeightIsSzegoA) {
  const CliRun r = cli({"solve", "--curve", "quadratic", "--a", "0.2,0.1", "--weight", "expcos", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(nlohmann::json::parse(r.out)["curve"].get<std::string>().find("a=0.2+0.1i"), std::string::npos);
  const CliRun s = cli({"solve", "--curve", "quadratic", "--curve-a", "0.2,0", "--weight", "szego_a", "--weight-a", "0.3,0",
                     "--n", "1"});
  ASSERT_EQ(s.code, 0) << s.err;
  const auto j = nlohmann::json::parse(s.out);
  EXPECT_EQ(j["weight"], "szego_a(a=0.3+0i)");
}

TEST(Cli, ConfigErrorsExitTwo) {
  const auto dir = temp_dir("badcfg");
  std::ofstream(dir / "bad.json") << "{\n  \"p\": [2],\n  \"M\": 1024,,\n}\n";
  const CliRun r = cli({"verify", "theorem", "--config", (dir / "bad.json").string(), "--out-dir", dir.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_EQ(cli({"verify", "theorem", "--config", (dir / "missing.json").string()}).code, 2);
  EXPECT_EQ(cli({"solve", "--curve", "ellipse"}).code, 2);
  EXPECT_EQ(cli({"solve", "--p", "1"}).code, 2);
  EXPECT_EQ(cli({"solve", "--M", "1000"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"solve", "--curve", "quadratic", "--curve-a", "0.6"}).code, 2);
}

TEST(Cli, FlagsOverrideConfig) {
  const auto dir = temp_dir("override");
  std::ofstream(dir / "cfg.json") << R"({"weight": {"kind": "expcos"}, "p": 3, "n": [0, 5], "radii": [0.5], "n_ang": 32, "n_r": 2})";
  const CliRun r = cli({"verify", "theorem", "--config", (dir / "cfg.json").string(), "--n-max", "2", "--out-dir",
                     dir.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const std::string csv = slurp(dir / "report.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_NE(csv.find("disk/expcos/p=3,2,"), std::string::npos);
}

TEST(Cli, RandomVerifiersAndReport) {
  const auto dir = temp_dir("random");
  for (const char* kind : {"proposition", "corollary1", "corollary2", "fejer-riesz"}) {
    const CliRun r = cli({"verify", kind, "--weight", "expcos", "--trials", "20", "--seed", "5", "--out-dir", dir.string()});
    EXPECT_EQ(r.code, 0) << kind << r.err;
    const auto j = nlohmann::json::parse(slurp(dir / "summary.json"));
    EXPECT_EQ(j["totals"]["fail"], 0);
  }
  ASSERT_EQ(cli({"sweep", "--weight", "expcos", "--n-max", "5", "--radii", "0.9", "--n-ang", "32", "--out-dir",
                 dir.string()}).code, 0);
  const auto sweep = nlohmann::json::parse(slurp(dir / "summary.json"));
  EXPECT_LT(sweep["decay_rate"]["disk/expcos/p=2"].get<double>(), 0.0);
  const CliRun rep = cli({"report", "--csv", (dir / "report.csv").string()});
  EXPECT_EQ(rep.code, 0) << rep.err;
  EXPECT_EQ(nlohmann::json::parse(rep.out)["totals"]["rows"], 6);
}

TEST(Cli, ReportExitOneOnViolation) {
  const auto dir = temp_dir("violation");
  std::ofstream(dir / "report.csv") << kCsvHeader << "\n"
                                    << "x,0,1.0e+00,2.0e+00,1.0e+00,1.0e+00,-1.0e+00,false,0.0e+00\n";
  EXPECT_EQ(cli({"report", "--csv", (dir / "report.csv").string()}).code, 1);
}
