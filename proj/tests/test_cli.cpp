#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  std::string out;
  int status = -1;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(QEULER_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST(Cli, TangentTable) {
  const auto r = run("table etangent --n-max 2 --format text");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "E_1 = 1\nE_3 = 1 + q\nE_5 = 2 + 5q + 5q^2 + 3q^3 + q^4\n");
}

TEST(Cli, SmallTables) {
  EXPECT_EQ(run("table A --n-max 0").out, "A_0 = 1\n");
  const auto t = run("table touchard --n-max 2 --format text").out;
  EXPECT_EQ(t.substr(t.rfind("T_2")), "T_2 = 2 + q\n");
  EXPECT_EQ(run("table esecant --n-max 1 --format csv").out, "n,coef,yExp,qExp\n0,1,0,0\n1,1,0,0\n");
  EXPECT_EQ(run("table B --n-max 2 --format json").out,
            "{\"kind\":\"B\",\"rows\":[{\"n\":0,\"label\":\"B_0\",\"value\":{\"vars\":[\"y\",\"q\"],"
            "\"terms\":[[1,0,0]]}},{\"n\":1,\"label\":\"B_1\",\"value\":{\"vars\":[\"y\",\"q\"],"
            "\"terms\":[]}},{\"n\":2,\"label\":\"B_2\",\"value\":{\"vars\":[\"y\",\"q\"],"
            "\"terms\":[[1,1,0]]}}]}\n");
}

TEST(Cli, Bijection) {
  const auto r = run("bijection 4371265");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "U[+1,1,0] F[+1,1,1] U[+1,1,0] D[+1,0,0] U[+1,1,1] D[+1,0,1] D[+1,0,0]");
  EXPECT_EQ(run("bijection 1").out.substr(0, 9), "F[+1,1,0]");
  EXPECT_EQ(run("bijection 21").out.substr(0, 19), "U[+1,1,0] D[+1,0,0]");
  EXPECT_EQ(run("bijection 112").status, 2);
}

TEST(Cli, VerifyExitCodes) {
  const auto th1 = run("verify th1 --n-max 7");
  EXPECT_EQ(th1.status, 0);
  EXPECT_NE(th1.out.find("status pass"), std::string::npos);
  const auto th2 = run("verify th2 --n-max 1");
  EXPECT_EQ(th2.status, 0);
  EXPECT_NE(th2.out.find("checks 1, failures 0"), std::string::npos);
  EXPECT_EQ(run("verify nope").status, 2);
  EXPECT_EQ(run("verify th1 --n-max 30").status, 2);
  const auto small = run("verify th1", "QEULER_BUDGET_OVERRIDE=th1=3");
  EXPECT_EQ(small.status, 0);
  EXPECT_NE(small.out.find("alternating-sum [n=3]"), std::string::npos);
  EXPECT_EQ(small.out.find("alternating-sum [n=4]"), std::string::npos);
  EXPECT_EQ(run("verify th1", "QEULER_BUDGET_OVERRIDE=permutations=11").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("table nope").status, 2);
  EXPECT_EQ(run("table A --n-max 99").status, 2);
  EXPECT_EQ(run("table A --format xml").status, 2);
  EXPECT_EQ(run("paths laguerre 20").status, 2);
}

TEST(Cli, TableauxAndPaths) {
  const auto pt = run("tableaux 2");
  EXPECT_EQ(pt.status, 0);
  const auto dt = run("tableaux 1 --derangement");
  EXPECT_EQ(dt.out, "");
  const auto paths = run("paths laguerre 2");
  EXPECT_EQ(paths.status, 0);
  std::size_t lines = 0;
  for (char c : paths.out) lines += c == '\n';
  EXPECT_EQ(lines, 2U);
}

TEST(Cli, OutputIsDeterministic) {
  EXPECT_EQ(run("table eulerian --n-max 6 --format json").out, run("table eulerian --n-max 6 --format json").out);
  EXPECT_EQ(run("table A --n-max 6 --jobs 3").out, run("table A --n-max 6").out);
}
