#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "cli_support.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using cli::run;
using cli::slurp;
using cli::TempDir;

TEST(Cli, HelpListsFlagsWithDefaults) {
  const auto top = run("--help");
  EXPECT_EQ(top.code, 0);
  for (const char* sub : {"spiral", "verify", "discover", "render", "report", "--config"}) {
    EXPECT_NE(top.out.find(sub), std::string::npos) << sub;
  }
  const auto verify = run("verify --help");
  EXPECT_EQ(verify.code, 0);
  for (const char* flag : {"--n-max", "20000", "--angular-tol", "0.35", "--min-chain-len",
                           "--gap-deg", "12", "--pair-tol-deg", "8", "--axis-tol-deg",
                           "--drift-epsilon", "0.005", "--format", "text", "--divisor", "--out"}) {
    EXPECT_NE(verify.out.find(flag), std::string::npos) << flag;
  }
  const auto render = run("render --help");
  for (const char* flag : {"--mirror", "--n-max", "400", "--divisor"}) {
    EXPECT_NE(render.out.find(flag), std::string::npos) << flag;
  }
}

TEST(Cli, BadArgumentsExitTwo) {
  EXPECT_EQ(run("spiral --n-max 1").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("discover").code, 2);
  EXPECT_EQ(run("discover --divisor 1").code, 2);
  EXPECT_EQ(run("verify --format yaml --divisor 17").code, 2);
  EXPECT_EQ(run("verify --divisor 7").code, 2);
  EXPECT_EQ(run("verify --divisor 17 --gap-deg -1").code, 2);
}

TEST(Cli, VerifySeventeen) {
  const auto r = run("verify --divisor 17");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("polynomial.P1.divisible"), std::string::npos);
  EXPECT_NE(r.out.find("known discrepancies:"), std::string::npos);
  EXPECT_NE(r.out.find("mismatched 0"), std::string::npos);
}

TEST(Cli, DiscoverSevenHasNoPaperData) {
  const auto r = run("discover --divisor 7");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("divisor"), 7);
  EXPECT_EQ(j.at("claims").at(0).at("status"), "no-paper-data");
  EXPECT_FALSE(j.at("systems").empty());
}

TEST(Cli, SpiralCsv) {
  TempDir dir("csv");
  const fs::path out = dir.path() / "s.csv";
  ASSERT_EQ(run("spiral --n-max 100 --out " + out.string()).code, 0);
  const std::string csv = slurp(out);
  EXPECT_EQ(csv.rfind("n,radius,theta_rad,winding,x,y\n1,", 0), 0u);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  EXPECT_EQ(lines, 101u);
  EXPECT_FALSE(fs::exists(dir.path() / "s.csv.tmp"));
}

TEST(Cli, ConfigFileAndOverride) {
  TempDir dir("cfg");
  const fs::path cfg = dir.path() / "c.json";
  std::ofstream(cfg) << R"({"gap_deg": 10.0, "pair_tol_deg": 6.0})";
  const auto a = run("--config " + cfg.string() + " discover --divisor 17");
  ASSERT_EQ(a.code, 0);
  const auto ja = nlohmann::json::parse(a.out);
  EXPECT_EQ(ja.at("parameters").at("gap_deg"), 10.0);
  EXPECT_EQ(ja.at("parameters").at("pair_tol_deg"), 6.0);
  const auto b = run("--config " + cfg.string() + " discover --divisor 17 --gap-deg 11");
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(nlohmann::json::parse(b.out).at("parameters").at("gap_deg"), 11.0);

  const fs::path bad = dir.path() / "bad.json";
  std::ofstream(bad) << R"({"gap_degrees": 10})";
  EXPECT_EQ(run("--config " + bad.string() + " discover --divisor 17").code, 2);
  const fs::path broken = dir.path() / "broken.json";
  std::ofstream(broken) << "{";
  EXPECT_EQ(run("--config " + broken.string() + " discover --divisor 17").code, 2);
  EXPECT_EQ(run("--config " + (dir.path() / "missing.json").string() + " discover --divisor 17").code, 2);
}

TEST(Cli, IdenticalInvocationsIdenticalFiles) {
  TempDir dir("same");
  const fs::path a = dir.path() / "a.svg", b = dir.path() / "b.svg";
  ASSERT_EQ(run("render --divisor 13 --out " + a.string()).code, 0);
  ASSERT_EQ(run("render --divisor 13 --out " + b.string()).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_NE(slurp(a).find("<svg"), std::string::npos);
  const fs::path m = dir.path() / "m.svg";
  ASSERT_EQ(run("render --divisor 13 --mirror --out " + m.string()).code, 0);
  EXPECT_NE(slurp(a), slurp(m));
}

TEST(Cli, EnvironmentOutputDirectory) {
  TempDir dir("env");
  const std::string env = "THEODORUS_OUT_DIR=" + dir.str();
  const auto r = run("discover --divisor 17", env);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(fs::exists(dir.path() / "discover_d17.json"));
  ASSERT_EQ(run("render --divisor 17", env).code, 0);
  EXPECT_TRUE(fs::exists(dir.path() / "figure_d17.svg"));
}

TEST(Cli, ReportNeedsDirectory) {
  EXPECT_EQ(run("report --all").code, 2);
}
