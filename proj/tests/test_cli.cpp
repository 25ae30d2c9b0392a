#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is folded into `out` when asked.
CliRun cli(const std::string& args, bool with_stderr = false, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + SECANTLAB_CLI + std::string(" ") + args +
                    (with_stderr ? " 2>&1" : " 2>/dev/null");
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) { return std::string(SECANTLAB_FIXTURES) + "/" + name; }

}  // namespace

TEST(Cli, CurveJson) {
  CliRun r = cli("curve --file " + fx("elliptic_quintic_101.curve") + " --format json");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["ideal"].size(), 5u);
  EXPECT_EQ(j["r"], 4);
  EXPECT_EQ(j["prime"], 101);
  EXPECT_EQ(j["ms"], 0);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(cli("curve --file " + fx("missing.curve")).code, 2);
  CliRun even = cli("curve --file " + fx("genus2_even.curve"), true);
  EXPECT_EQ(even.code, 2);
  EXPECT_NE(even.out.find("even-degree model rejected"), std::string::npos);
  CliRun bad = cli("curve --file " + fx("bad_syntax.curve"), true);
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("parse error at byte"), std::string::npos);
  EXPECT_EQ(cli("curve --file " + fx("rnc4.curve") + " --prime 100").code, 2);
  EXPECT_EQ(cli("verify --file " + fx("rnc4.curve") + " --k -1").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
}

TEST(Cli, VerifyEllipticQuintic) {
  CliRun r = cli("verify --file " + fx("elliptic_quintic.curve") + " --k 1 --format json");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 8u);
  for (const auto& row : j["rows"]) EXPECT_EQ(row["verdict"].get<std::string>().rfind("match", 0), 0u) << row.dump();
  EXPECT_EQ(j["seed"], 20231);
  EXPECT_EQ(j["prime"], 32003);
  EXPECT_EQ(j["instance"]["k"], 1);
}

TEST(Cli, VerifyFillingSecant) {
  CliRun r = cli("verify --file " + fx("rnc4.curve") + " --k 2 --format json");
  json j = json::parse(r.out);
  EXPECT_EQ(j["rows"][0]["name"], "dim");
  EXPECT_EQ(j["rows"][0]["verdict"], "skipped(fills ambient)");
}

TEST(Cli, ResourceLimitExitCode) {
  CliRun r = cli("verify --file " + fx("rnc6.curve") + " --k 1 --budget 10 --format json");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("ResourceLimit"), std::string::npos);
  EXPECT_EQ(cli("verify --file " + fx("rnc6.curve") + " --k 1", false, "SECANTLAB_PAIR_BUDGET=10").code, 3);
  EXPECT_EQ(cli("verify --file " + fx("rnc6.curve") + " --k 1 --budget 100000", false, "SECANTLAB_PAIR_BUDGET=10").code, 0);
  EXPECT_EQ(cli("secant --file " + fx("rnc6.curve") + " --k 1 --budget 10").code, 3);
}

TEST(Cli, BettiTwistedCubic) {
  CliRun r = cli("betti --ideal " + fx("twisted_cubic.ideal"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("    1: . 3 2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("regularity: 1\n"), std::string::npos);
}

TEST(Cli, BettiQuinticHypersurface) {
  CliRun r = cli("betti --ideal " + fx("quintic_hypersurface.ideal") + " --format json");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["betti"]["entries"], json::parse("[[0,0,1],[1,5,1]]"));
  EXPECT_EQ(j["betti"]["r"], 4);
  EXPECT_EQ(j["regularity"], 4);
}

TEST(Cli, BettiTruncation) {
  CliRun r = cli("betti --file " + fx("elliptic_sextic.curve") + " --k 1 --max-degree 4");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("regularity: unknown (truncated)"), std::string::npos) << r.out;
  CliRun j = cli("betti --file " + fx("elliptic_sextic.curve") + " --k 1 --max-degree 4 --format json");
  EXPECT_EQ(json::parse(j.out)["betti"]["degree_bound"], 4);
}

TEST(Cli, DeterministicJson) {
  std::string args = "verify --file " + fx("elliptic_sextic.curve") + " --k 1 --format json --seed 7";
  CliRun a = cli(args), b = cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["seed"], 7);
}

TEST(Cli, JobsMatchSequentialAndOutputFile) {
  std::string files = " --file " + fx("rnc5.curve") + " --file " + fx("elliptic_quintic.curve") + " --k 1 --format json";
  CliRun seq = cli("verify" + files);
  CliRun par = cli("verify" + files + " --jobs 2");
  EXPECT_EQ(seq.code, 0);
  EXPECT_EQ(seq.out, par.out);
  EXPECT_EQ(json::parse(seq.out).size(), 2u);
  auto path = std::filesystem::temp_directory_path() / "secantlab_cli_test.json";
  EXPECT_EQ(cli("verify" + files + " --output " + path.string()).code, 0);
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_EQ(s.str(), seq.out);
  std::filesystem::remove(path);
}

TEST(Cli, PrimeOverride) {
  CliRun r = cli("verify --file " + fx("elliptic_quintic.curve") + " --k 1 --prime 31013 --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["prime"], 31013);
}

TEST(Cli, BenchReportsTimes) {
  CliRun r = cli("bench --file " + fx("rnc5.curve") + " --k 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("time (ms): embed"), std::string::npos) << r.out;
}
