#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oligoforge/cli.hpp"

namespace fs = std::filesystem;
using oligoforge::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(OLIGOFORGE_SAMPLES_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("oligoforge-cli-" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) const {
    const auto p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, FoldPrintsTablesAndEnergies) {
  const auto r = call({"fold", "--input", sample("fold_examples.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("sequence GCGCCCCGC (line 2)"), std::string::npos);
  EXPECT_NE(r.out.find("energy -6\n"), std::string::npos);
  EXPECT_NE(r.out.find("energy -1\n"), std::string::npos);
  EXPECT_NE(r.out.find("C   0   0  -2  -2  -2  -2  -2  -4  -4\n"), std::string::npos);
  EXPECT_NE(r.out.find("verdict structure (threshold -2)"), std::string::npos);
  EXPECT_NE(r.out.find("verdict no structure (threshold -2)"), std::string::npos);
}

TEST_F(CliTest, FoldJsonAndThreshold) {
  const auto r = call({"fold", "--input", sample("fold_examples.txt"), "--format", "json", "--threshold", "-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["energy"], -6);
  EXPECT_EQ(j[1]["energy"], -1);
  EXPECT_EQ(j[1]["structure"], true);
  EXPECT_EQ(j[1]["pairs"].size(), 1u);
}

TEST_F(CliTest, FoldEmptyInputIsFine) {
  const auto r = call({"fold", "--input", file("empty.txt", "# nothing\n\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, FoldReportsBadLine) {
  const auto r = call({"fold", "--input", file("bad.txt", "ACGT\nACNT\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(call({"fold", "--input", path("missing.txt")}).code, 2);
}

TEST_F(CliTest, ScreenByShiftAndGc) {
  const auto r = call({"screen", "--input", sample("candidates.txt"), "--max-mu", "2", "-w", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "TGGCTCA\nGGGAGAA\nTAGCCTG\n");
  EXPECT_EQ(lines_of(r.err), (std::vector<std::string>{"4\tCACGGTC\tGC 5", "5\tGCGCGCG\tmu_1 6; GC 7",
                                                        "7\tAAAAAAA\tGC 0"}));
}

TEST_F(CliTest, ScreenShallowShiftAndFiles) {
  const auto out = path("ok.txt"), log = path("rej.tsv");
  const auto r = call({"screen", "--input", sample("candidates.txt"), "--max-mu", "1", "-s", "1", "--output", out,
                       "--log", log});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(out), "TGGCTCA\nGGGAGAA\nCACGGTC\nAAAAAAA\n");
  EXPECT_EQ(lines_of(slurp(log)), (std::vector<std::string>{"5\tGCGCGCG\tmu_1 6", "6\tTAGCCTG\tmu_1 2"}));
}

TEST_F(CliTest, ScreenEnergyAndLinearModel) {
  auto r = call({"screen", "--input", sample("fold_examples.txt"), "--threshold", "-2"});
  EXPECT_EQ(r.out, "GAGGGTTTT\n");
  EXPECT_EQ(r.err, "2\tGCGCCCCGC\tenergy -6\n");
  r = call({"screen", "--input", sample("candidates.txt"), "--min-linear", "-4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("2\tTGGCTCA\tlinear -17/4"), std::string::npos);
  EXPECT_EQ(call({"screen", "--input", sample("candidates.txt"), "--min-linear", "-4", "--gammas", "1,2"}).code, 2);
}

TEST_F(CliTest, EnumerateDefaultTable) {
  const auto r = call({"enumerate", "-s", "2", "-n", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "n\tg_2(n)\n1\t4\n2\t12\n3\t28\n4\t68\n5\t164\n");
}

TEST_F(CliTest, EnumerateWithOracle) {
  const auto r = call({"enumerate", "-s", "3", "-n", "6", "--oracle", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  EXPECT_EQ(lines.front(), "n,g_3(n),oracle,match");
  EXPECT_EQ(lines.back(), "# oracle agreement: yes");
}

TEST_F(CliTest, EnumerateMuOneAndGc) {
  auto r = call({"enumerate", "--mu1", "-n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "n\tm\tcount\n2\t0\t12\n2\t1\t4\n");
  r = call({"enumerate", "--gc", "-n", "2", "-w", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["n"], 2);
  EXPECT_EQ(j[1]["count"], 8);
  EXPECT_EQ(call({"enumerate", "--mu1", "--gc"}).code, 1);
}

TEST_F(CliTest, OracleCapFromEnvironment) {
  ::setenv("OLIGOFORGE_ORACLE_CAP", "4", 1);
  const auto r = call({"count", "-n", "6"});
  ::unsetenv("OLIGOFORGE_ORACLE_CAP");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(call({"count", "-n", "3", "--predicate", "complement-free", "--format", "csv"}).out,
            "n,predicate,count\n3,no complementary pair,28\n");
  EXPECT_EQ(call({"count", "--predicate", "mu1"}).code, 1);
}

TEST_F(CliTest, GfReportsRoot) {
  const auto r = call({"gf", "-s", "2", "-n", "12"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# rho_s 2.414213562373"), std::string::npos);
  EXPECT_NE(r.out.find("5\t164\t164\tyes"), std::string::npos);
}

TEST_F(CliTest, ConstructWritesCodeAndSidecars) {
  const auto out = path("code.txt");
  const auto r = call({"construct", "-m", "3", "--generator", "1110100", "--output", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(slurp(out));
  ASSERT_EQ(lines.size(), 50u);
  EXPECT_EQ(lines[0], "# DNA code m=3 generator=1110100 words=49");
  EXPECT_NE(std::find(lines.begin(), lines.end(), "TGGCTCA"), lines.end());
  EXPECT_NE(std::find(lines.begin(), lines.end(), "GGGAGAA"), lines.end());
  const auto j = nlohmann::json::parse(slurp(out + ".json"));
  EXPECT_EQ(j["min_distance"], 4);
  EXPECT_NE(slurp(out + ".report.txt").find("verdict PASS"), std::string::npos);

  const auto v = call({"verify", "--input", out, "--no-fold"});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_NE(v.out.find("verdict PASS"), std::string::npos);
}

TEST_F(CliTest, ConstructSmallestAndDeterministic) {
  const auto a = call({"construct", "-m", "2", "--no-fold"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(lines_of(a.out).size(), 10u);
  EXPECT_EQ(a.out, call({"construct", "-m", "2", "--no-fold"}).out);
}

TEST_F(CliTest, ConstructRejectsBadGenerator) {
  const auto r = call({"construct", "-m", "3", "--generator", "1111111"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not a simplex generator"), std::string::npos);
}

TEST_F(CliTest, VerifyFlagsBrokenCode) {
  const auto r = call({"verify", "--input", file("broken.txt", "GCGCGCG\nAAAAAAA\n"), "--no-fold"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("verdict FAIL"), std::string::npos);
}

TEST_F(CliTest, ConfigFileAndOverride) {
  auto r = call({"construct", "--config", sample("construct.conf")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines_of(r.out).front(), "# DNA code m=3 generator=1110100 words=49");
  const auto conf = file("c.conf", "s = 3\nn = 4\n");
  r = call({"enumerate", "--config", conf});
  EXPECT_EQ(lines_of(r.out).front(), "n\tg_3(n)");
  EXPECT_EQ(lines_of(r.out).size(), 5u);
  r = call({"enumerate", "--config", conf, "-n", "2"});
  EXPECT_EQ(lines_of(r.out).size(), 3u);
  EXPECT_EQ(call({"enumerate", "--config", path("nope.conf")}).code, 1);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(call({}).code, 1);
  EXPECT_EQ(call({"bogus"}).code, 1);
  EXPECT_EQ(call({"fold"}).code, 1);
  EXPECT_EQ(call({"enumerate", "-n", "x"}).code, 1);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(CliProcess, ExitCodes) {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string(OLIGOFORGE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("enumerate -n 5"), 0);
  EXPECT_EQ(status("frobnicate"), 1);
  EXPECT_EQ(status("construct -m 3 --generator 1111111"), 2);
  EXPECT_EQ(status("fold --input " + sample("fold_examples.txt")), 0);
}
