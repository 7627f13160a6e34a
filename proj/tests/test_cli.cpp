#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "hdef/io/json.hpp"

using hdef::io::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HDEF_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json run_json(const std::string& args) {
  auto r = run(args);
  EXPECT_EQ(r.code, 0) << args;
  return Json::parse(r.out);
}

Json term(unsigned z, unsigned zbar, const char* re, const char* im) {
  return Json{{"z", z}, {"zbar", zbar}, {"re", re}, {"im", im}};
}

Json entry(const char* re, const char* im) { return Json{{"re", re}, {"im", im}}; }

}  // namespace

TEST(Cli, HermitePretty) {
  EXPECT_EQ(run("hermite 1 1").out, "H_{1,1} = z z~ - 1\n");
  EXPECT_EQ(run("hermite 0 0").out, "H_{0,0} = 1\n");
}

TEST(Cli, HermiteJsonTerms) {
  auto j = run_json("hermite 2 1 --format json");
  ASSERT_EQ(j["poly"]["terms"].size(), 2u);
  EXPECT_EQ(j["poly"]["terms"][0], term(1, 0, "-2/1", "0/1"));
  EXPECT_EQ(j["poly"]["terms"][1], term(2, 1, "1/1", "0/1"));
  EXPECT_EQ(j["norm_squared"], "2/1");
}

TEST(Cli, HermiteRoutesAgree) {
  auto a = run("hermite 3 2 --format json --route sum").out;
  EXPECT_EQ(a, run("hermite 3 2 --format json --route rodrigues").out);
  EXPECT_EQ(a, run("hermite 3 2 --format json --route operator").out);
}

TEST(Cli, HermiteCsv) {
  EXPECT_EQ(run("hermite 1 1 --format csv").out, "z,zbar,re,im\n0,0,-1/1,0/1\n1,1,1/1,0/1\n");
}

TEST(Cli, RealHermite) {
  auto j = run_json("real-hermite 2 --format json");
  EXPECT_EQ(j["poly"]["terms"][0], (Json{{"x1", 0}, {"x2", 0}, {"re", "-2/1"}, {"im", "0/1"}}));
  EXPECT_EQ(j["poly"]["terms"][1], (Json{{"x1", 2}, {"x2", 0}, {"re", "4/1"}, {"im", "0/1"}}));
}

TEST(Cli, DeformAlpha) {
  auto j = run_json("deform --alpha 3/5 1 0 --format json");
  ASSERT_EQ(j["poly"]["terms"].size(), 2u);
  EXPECT_EQ(j["poly"]["terms"][0], term(0, 1, "0/1", "-4/5"));
  EXPECT_EQ(j["poly"]["terms"][1], term(1, 0, "3/5", "0/1"));
}

TEST(Cli, DeformIdentityIsUndeformed) {
  EXPECT_EQ(run("deform --g 1 0 0 1 2 2 --format json").out, run("hermite 2 2 --format json").out);
}

TEST(Cli, DeformDiagonal) {
  auto j = run_json("deform --g \"2\" \"0\" \"0\" \"3\" 1 1 --format json");
  EXPECT_EQ(j["poly"]["terms"][0], term(0, 0, "-6/1", "0/1"));
  EXPECT_EQ(j["poly"]["terms"][1], term(1, 1, "6/1", "0/1"));
}

TEST(Cli, RepmatExamples) {
  auto id = run_json("repmat --g 1 0 0 1 2 --format json");
  EXPECT_EQ(id["L"], 2);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) EXPECT_EQ(id["rows"][r][c], entry(r == c ? "1/1" : "0/1", "0/1"));

  auto diag = run_json("repmat --g 2 0 0 3 2 --format json");
  EXPECT_EQ(diag["rows"][0][0], entry("9/1", "0/1"));
  EXPECT_EQ(diag["rows"][1][1], entry("6/1", "0/1"));
  EXPECT_EQ(diag["rows"][2][2], entry("4/1", "0/1"));

  auto a = run_json("repmat --alpha 3/5 1 --format json");
  EXPECT_EQ(a["rows"][0][0], entry("3/5", "0/1"));
  EXPECT_EQ(a["rows"][0][1], entry("0/1", "-4/5"));
  EXPECT_EQ(a["rows"][1][0], entry("0/1", "4/5"));
  EXPECT_EQ(a["rows"][1][1], entry("3/5", "0/1"));
}

TEST(Cli, Dual) {
  auto j = run_json("dual --alpha 3/5 2 --format json");
  EXPECT_TRUE(j["routes_agree"].get<bool>());
  EXPECT_EQ(j["family"].size(), 3u);
}

TEST(Cli, Genfun) {
  auto j = run_json("genfun --order 3 --format json");
  EXPECT_EQ(j["kind"], "complex");
  EXPECT_EQ(j["order"], 3);
  bool found = false;
  for (const auto& c : j["coefficients"])
    if (c["k"] == 1 && c["l"] == 1) {
      EXPECT_EQ(c["poly"], run_json("hermite 1 1 --format json")["poly"]);
      found = true;
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(run_json("genfun --real --order 3 --format json")["kind"], "real");
  EXPECT_EQ(run_json("genfun --alpha 3/5 --order 2 --format json")["kind"], "deformed");
}

TEST(Cli, VerifySuitesPass) {
  EXPECT_EQ(run("verify biorth --alpha 3/5 --Lmax 4").code, 0);
  EXPECT_EQ(run("verify orthonormal --Lmax 6").code, 0);
  for (const char* s : {"repmat", "eigen", "intertwine", "ncqm", "qp", "dualscale"}) EXPECT_EQ(run(std::string("verify ") + s).code, 0) << s;
}

TEST(Cli, VerifyBiorthSchema) {
  auto j = run_json("verify biorth --alpha 3/5 --Lmax 4 --format json");
  EXPECT_EQ(j["Lmax"], 4);
  EXPECT_TRUE(j["violations"].empty());
  EXPECT_EQ(j["status"], "pass");
}

TEST(Cli, VerifyLieClass) {
  auto j = run_json("verify lie --alpha 3/5 --format json");
  EXPECT_EQ(j["class"], "su2_plus_u1");
  EXPECT_EQ(j["status"], "pass");
  auto b = run_json("verify lie --theta 1 --backend float --format json");
  EXPECT_EQ(b["class"], "heisenberg_plus_u1");
}

TEST(Cli, LieReport) {
  auto j = run_json("lie-report --alpha 3/5 --format json");
  EXPECT_EQ(j["class"], "su2_plus_u1");
  EXPECT_EQ(j["basis"].size(), 4u);
  EXPECT_EQ(run_json("lie-report --theta 1 --float --format json")["class"], "heisenberg_plus_u1");
}

TEST(Cli, FailureExitCodes) {
  EXPECT_NE(run("verify nosuch").code, 0);
  EXPECT_NE(run("deform --g 1 2 2 4 1 1").code, 0);   // singular
  EXPECT_EQ(run("verify lie --theta 1").code, 0);      // continuation is exact on rational samples
  EXPECT_NE(run("verify lie --theta 3/2").code, 0);
  EXPECT_NE(run("verify ncqm --alpha 1/3").code, 0);   // sqrt(8/9) is irrational
  EXPECT_NE(run("verify biorth --format csv").code, 0);
  EXPECT_NE(run("verify eigen --g 1 1 -1 3 --float").code, 0);  // repeated eigenvalue, not triangular
  EXPECT_NE(run("").code, 0);
}

TEST(Cli, FloatBackendAgrees) {
  auto j = run_json("hermite 2 1 --backend float --format json");
  EXPECT_DOUBLE_EQ(j["poly"]["terms"][0]["re"].get<double>(), -2.0);
  auto d = run_json("deform --alpha 0.6 1 0 --float --format json");
  EXPECT_NEAR(d["poly"]["terms"][0]["im"].get<double>(), -0.8, 1e-12);
  EXPECT_EQ(run("verify ncqm --alpha 0.6 --float").code, 0);
}

TEST(Cli, SeedManifest) {
  auto j = run_json("--seed-manifest");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["backend"], "exact");
  for (const char* s : {"orthonormal", "biorth", "repmat", "eigen", "intertwine", "ncqm", "lie", "qp", "dualscale", "lie_theta_1"})
    EXPECT_TRUE(j["suites"].contains(s)) << s;
  EXPECT_EQ(j["suites"]["lie_theta_1"]["class"], "heisenberg_plus_u1");
}
