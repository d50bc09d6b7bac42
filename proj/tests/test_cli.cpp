#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "", const std::string& redirect = "2>/dev/null") {
  const std::string cmd = env + " " TORIC_BETTI_EXE " " + args + " " + redirect;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Result run_stderr(const std::string& args, const std::string& env = "") {
  return run(args, env, "2>&1 >/dev/null");
}

} // namespace

TEST(Cli, InvariantsCompleteGraph) {
  const auto r = run("invariants --family complete:4");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["sa_poly"], nlohmann::json::parse(R"(["5","0","-6","0","1"])"));
}

TEST(Cli, InvariantsMultipartiteText) {
  const auto r = run("invariants --family multipartite:2,2 --format text");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("poincare  1+4z+3z^2"), std::string::npos);
}

TEST(Cli, InvariantsNullGraph6) {
  const auto r = run("invariants --graph6 '?' --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["vertices"], 0);
  EXPECT_EQ(j["snum"], "1");
  EXPECT_EQ(j["bnum"], "1");
  EXPECT_EQ(j["poincare"], nlohmann::json::parse(R"(["1"])"));
}

TEST(Cli, InvariantsEdgeFile) {
  const auto r = run("invariants --edges " TORIC_SAMPLES_DIR "/diamond.edges --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n4,4,4,0,1;0;5;0;4,4;0;-5;0;1,"), std::string::npos) << r.out;
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  const auto r = run("invariants --family cycle:8");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::ordered_json::parse(r.out).dump(2) + "\n", r.out);
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run("invariants --graph6 'C'").code, 2);
  EXPECT_EQ(run("invariants --family wheel:5").code, 2);
  EXPECT_EQ(run("invariants --family cycle:2").code, 2);
  EXPECT_EQ(run("invariants --edges /nonexistent/file").code, 2);
  EXPECT_EQ(run("invariants").code, 2);
  EXPECT_EQ(run("invariants --family path:3 --graph6 '?'").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, CapExceededExitsThree) {
  const auto r = run_stderr("invariants --family path:25");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("--cap"), std::string::npos);
  EXPECT_NE(r.out.find("TORIC_BETTI_CAP"), std::string::npos);
  EXPECT_EQ(run("invariants --family path:21", "TORIC_BETTI_CAP=22").code, 0);
  EXPECT_EQ(run("invariants --family path:21 --cap 21").code, 0);
  EXPECT_EQ(run("invariants --family path:3", "TORIC_BETTI_CAP=2").code, 3);
  EXPECT_EQ(run("invariants --family path:3", "TORIC_BETTI_CAP=abc").code, 2);
}

TEST(Cli, CapAboveDefaultWarns) {
  const auto r = run_stderr("invariants --family path:3 --cap 24");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("warning"), std::string::npos);
}

TEST(Cli, PoincareTableDefaults) {
  const auto r = run("table5");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p=6 q=2  1+12z+125z^2+597z^3+483z^4\n"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 28);
}

TEST(Cli, PoincareTableSmall) {
  EXPECT_EQ(run("table5 --pmax 0 --qmax 0").out, "p=0 q=0  1\n");
  const auto r = run("table5 --pmax 5 --qmax 1 --format csv");
  EXPECT_NE(r.out.find("5,1,1;5;20;16\n"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(run("table5 --format json").out).size(), 28u);
}

TEST(Cli, Verify) {
  const auto one = run("verify --identity complete_sa_egf --order 10");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out.rfind("PASS complete_sa_egf", 0), 0u);
  const auto all = run("verify --identity all --order 8 --format json");
  EXPECT_EQ(all.code, 0);
  const auto j = nlohmann::json::parse(all.out);
  EXPECT_EQ(j.size(), 33u);
  for (const auto& e : j) EXPECT_TRUE(e["passed"].get<bool>()) << e["id"];
  EXPECT_EQ(run("verify --identity bogus").code, 2);
}

TEST(Cli, Catalog) {
  const auto r = run("catalog --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.size(), 33u);
  EXPECT_EQ(j[0]["id"], "path_sa_gf");
}

TEST(Cli, Sequences) {
  EXPECT_EQ(run("sequence --what snum --family path --upto 8").out, "1,0,-1,0,2,0,-5,0,14\n");
  EXPECT_EQ(run("sequence --what bnum --family complete --upto 6").out, "1,1,0,-2,0,16,0\n");
  EXPECT_EQ(run("sequence --what anum --family cycle --upto 6").out, "1,0,1,0,3,0,10\n");
  EXPECT_EQ(run("sequence --what snum --family bipartite-row:1 --upto 5").out, "0,-1,0,2,0,-16\n");
  EXPECT_EQ(run("sequence --what snum --family wheel --upto 5").code, 2);
  EXPECT_EQ(run("sequence --what cnum --family path --upto 5").code, 2);
}
