#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct CliResult {
  int status;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(QPSEUDO_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, SpectrumExamples) {
  EXPECT_EQ(run("spectrum --matrix diagjk").out, "[(0, 1)]\n");
  EXPECT_EQ(run("spectrum --matrix nilpotent2").out, "[(0, 0)]\n");
  EXPECT_EQ(run("spectrum --matrix proj2").out, "[(0, 0), (1, 0)]\n");
  const CliResult j = run("spectrum --matrix proj2 --format json");
  EXPECT_EQ(json::parse(j.out)["classes"].size(), 2u);
}

TEST(Cli, InlineJsonMatrix) {
  const CliResult r = run(R"(spectrum --matrix '{"n":1,"entries":[[[0.5,0.1,0,0]]]}')");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "[(0.5, 0.1)]\n");
}

TEST(Cli, ErrorsExitNonzero) {
  EXPECT_NE(run("spectrum --matrix no-such-thing").status, 0);
  EXPECT_NE(run(R"(spectrum --matrix '{"n":2,"entries":[[[0,0,0,0]]]}')").status, 0);
  EXPECT_NE(run("pseudo-grid --matrix proj2").status, 0);  // no eps, no box
  EXPECT_NE(run("pseudo-grid --matrix proj2 --eps 0.1 --box 1,0,0,1").status, 0);
  EXPECT_NE(run("contour --matrix proj2 --eps -1").status, 0);
  EXPECT_NE(run("verify --only nope").status, 0);
  EXPECT_NE(run("").status, 0);
}

TEST(Cli, PseudoGridAutoBoxAndDeterminism) {
  const CliResult a = run("pseudo-grid --matrix nilpotent2 --eps 1.1 --res 21,11 --threads 1");
  const CliResult b = run("pseudo-grid --matrix nilpotent2 --eps 1.1 --res 21,11 --threads 3");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  std::istringstream in(a.out);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(header, "x,y,smin");
  const double r = 1.0 + std::sqrt(1.1) + 0.1;
  EXPECT_NEAR(std::stod(first.substr(0, first.find(','))), -r, 1e-15);

  const CliResult j1 = run("pseudo-grid --matrix disc-normal --eps 0.25 --res 11,6 --format json");
  const CliResult j2 = run("pseudo-grid --matrix disc-normal --eps 0.25 --res 11,6 --format json");
  EXPECT_EQ(j1.out, j2.out);
  EXPECT_EQ(json::parse(j1.out)["values"].size(), 66u);
}

TEST(Cli, PseudoGridZeroMatrix) {
  const CliResult r = run(R"(pseudo-grid --matrix '{"n":1,"entries":[[[0,0,0,0]]]}' --box -1,1,0,1 --res 3,2)");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "x,y,smin\n-1,0,1\n0,0,0\n1,0,1\n-1,1,2\n0,1,1\n1,1,2\n");
}

TEST(Cli, ContourCounts) {
  const auto loops = [](double eps) {
    const CliResult r = run("contour --matrix leftmult:0.5+0.1i:1 --eps " + std::to_string(eps));
    return json::parse(r.out)["polylines"].size();
  };
  EXPECT_EQ(loops(0.005), 2u);
  const auto mid = loops(0.0125);
  EXPECT_TRUE(mid == 1u || mid == 2u);
  EXPECT_EQ(loops(0.15), 1u);
  const CliResult none = run("contour --matrix leftmult:0.5+0.1i:1 --eps 1e-9 --res 41,21");
  EXPECT_TRUE(json::parse(none.out)["polylines"].empty());
}

TEST(Cli, ContourSvgHasSingleRoot) {
  const CliResult r = run("contour --matrix leftmult:0.5+0.1i:1 --eps 0.005 --format svg --res 101,51");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
  EXPECT_EQ(r.out.find("<svg", 1), std::string::npos);
  EXPECT_EQ(r.out.substr(r.out.size() - 7), "</svg>\n");
}

TEST(Cli, Classify) {
  const json a = json::parse(run("classify --matrix leftmult:0.5+0.1i:2 --eps 0.005").out);
  EXPECT_EQ(a["shape"], "empty");
  const json b = json::parse(run("classify --matrix leftmult:0.5+0.1i:2 --eps 0.01").out);
  EXPECT_EQ(b["shape"], "nonempty-connected");
  EXPECT_EQ(b["witness"], 0.5);
  const json c = json::parse(run("classify --matrix disc-normal --eps 0.25").out);
  EXPECT_EQ(c["shape"], "nonempty-disconnected");
  EXPECT_EQ(c["segments"].size(), 2u);
}

TEST(Cli, VerifySingleChecks) {
  const CliResult ok = run("verify --only normal-distance --matrix diagjk");
  EXPECT_EQ(ok.status, 0);
  const json a = json::parse(ok.out);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0]["passed"], true);

  const CliResult bad = run("verify --only g1 --matrix nilpotent2");
  EXPECT_EQ(bad.status, 1);
  const json b = json::parse(bad.out);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0]["passed"], false);
  EXPECT_FALSE(b[0]["witness"].is_null());
}

TEST(Cli, VerifyFullSuiteIsDeterministic) {
  const CliResult a = run("verify --seed 7");
  const CliResult b = run("verify --seed 7");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  for (const auto& r : json::parse(a.out)) EXPECT_TRUE(r["passed"].get<bool>()) << r["name"];
}

TEST(Cli, ExamplesWritesStableFiles) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qpseudo_examples_test";
  fs::remove_all(dir);
  ASSERT_EQ(run("examples --res 101,51 --out " + dir.string()).status, 0);
  for (const char* f : {"eight_shape_A.csv", "eight_shape_B.csv", "eight_shape_C.csv", "projection_region.json",
                        "nilpotent_boundary.csv", "triangular_family.csv", "disconnected_real.csv"})
    EXPECT_TRUE(fs::exists(dir / f)) << f;

  const json proj = json::parse(slurp(dir / "projection_region.json"));
  EXPECT_EQ(proj["centers"], json({0.0, 1.0}));
  EXPECT_EQ(proj["regions"].size(), 3u);
  EXPECT_EQ(proj["regions"][1]["radius"], 0.5);

  std::istringstream nb(slurp(dir / "nilpotent_boundary.csv"));
  std::string line;
  std::getline(nb, line);
  EXPECT_EQ(line, "q0,modulus,y");
  while (std::getline(nb, line)) {
    const auto a = line.find(','), b = line.rfind(',');
    const double q0 = std::stod(line.substr(0, a)), m = std::stod(line.substr(a + 1, b - a - 1));
    EXPECT_NEAR(m, std::pow(1.1 * (1.1 + 2 * std::fabs(q0)), 0.25), 1e-14);
  }

  const std::string first = slurp(dir / "eight_shape_A.csv");
  ASSERT_EQ(run("examples --res 101,51 --out " + dir.string()).status, 0);
  EXPECT_EQ(slurp(dir / "eight_shape_A.csv"), first);
  fs::remove_all(dir);
}
