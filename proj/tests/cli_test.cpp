#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <string>

namespace {

struct Result {
  int status;
  std::string out;
};

// Runs a shell pipeline; "mcvc" is replaced by the built binary.
Result sh(std::string command) {
  const std::string bin = MCVC_CLI_PATH;
  for (std::size_t at = command.find("mcvc"); at != std::string::npos; at = command.find("mcvc", at + bin.size()))
    command.replace(at, 4, bin);
  command += " 2>/dev/null";
  Result r{-1, {}};
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

TEST(Cli, EnumerateCounts) {
  auto prop2 = sh("mcvc generate --family prop2 --k 2 | mcvc enumerate --algo auto --count-only");
  EXPECT_EQ(prop2.status, 0);
  EXPECT_EQ(prop2.out, "9\n");
  auto none = sh("mcvc generate --family triangles --k 2 | mcvc enumerate --count-only");
  EXPECT_EQ(none.status, 0);
  EXPECT_EQ(none.out, "0\n");
  EXPECT_EQ(sh("mcvc generate --family prop2 --k 3 | mcvc enumerate --algo general --count-only").out, "27\n");
}

TEST(Cli, EnumerateListsCovers) {
  auto p3 = sh("printf '3\\n0 1\\n1 2\\n' | mcvc enumerate");
  EXPECT_EQ(p3.status, 0);
  EXPECT_EQ(p3.out, "1\n");
  EXPECT_EQ(sh("echo Bw | mcvc enumerate --format graph6").out, "0 1\n0 2\n1 2\n");
  EXPECT_EQ(sh("echo Dhc | mcvc enumerate --algo chord5").out, "0 1 2 3\n0 1 2 4\n0 1 3 4\n0 2 3 4\n1 2 3 4\n");
  auto stats = sh("echo Bw | mcvc enumerate --stats");
  EXPECT_NE(stats.out.find("nodes "), std::string::npos);
  EXPECT_NE(stats.out.find("leaves "), std::string::npos);
  EXPECT_NE(stats.out.find("class_bound "), std::string::npos);
}

TEST(Cli, EnumerateFromFile) {
  const std::string path = testing::TempDir() + "cli_p3.txt";
  FILE* f = std::fopen(path.c_str(), "w");
  ASSERT_NE(f, nullptr);
  std::fputs("# path\n3\n0 1\n1 2\n", f);
  std::fclose(f);
  EXPECT_EQ(sh("mcvc enumerate " + path).out, "1\n");
  EXPECT_EQ(sh("mcvc enumerate /nonexistent/graph.txt").status, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(sh("echo 'B!' | mcvc enumerate").status, 2);
  EXPECT_EQ(sh("printf '3\\n0 5\\n' | mcvc enumerate").status, 2);
  EXPECT_EQ(sh("echo Cr | mcvc enumerate --algo chordal").status, 3);
  EXPECT_EQ(sh("echo Cr | mcvc enumerate --algo split").status, 3);
  EXPECT_EQ(sh("mcvc generate --family gk --k 4 | MCVC_SIZE_GUARD=10 mcvc enumerate --algo oracle").status, 4);
  EXPECT_EQ(sh("mcvc generate --family gk --k 4 | mcvc verify --suite oracle").status, 4);
  EXPECT_EQ(sh("MCVC_SIZE_GUARD=abc mcvc verify --suite classes < /dev/null").status, 2);
  EXPECT_EQ(sh("mcvc generate --family prop2 --k 0").status, 2);
  EXPECT_EQ(sh("mcvc generate --family random --n 5 --p 2").status, 2);
  EXPECT_EQ(sh("mcvc generate --family nope").status, 2);
  EXPECT_EQ(sh("mcvc enumerate --algo nope < /dev/null").status, 2);
  EXPECT_EQ(sh("mcvc").status, 2);
}

TEST(Cli, Generate) {
  auto prop2 = sh("mcvc generate --family prop2 --k 2 --format edgelist");
  EXPECT_EQ(prop2.status, 0);
  EXPECT_EQ(prop2.out.substr(0, 2), "7\n");
  auto gk = sh("mcvc generate --family gk --k 1 --format edgelist");
  EXPECT_EQ(gk.out, "7\n0 5\n0 6\n1 5\n1 6\n2 5\n2 6\n3 5\n3 6\n4 5\n4 6\n");
  auto a = sh("mcvc generate --family random --n 8 --p 0.5 --seed 1");
  auto b = sh("mcvc generate --family random --n 8 --p 0.5 --seed 1");
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(sh("mcvc generate --family triangles --k 1").out, "Bw\n");
}

TEST(Cli, Verify) {
  auto oracle = sh("echo Dhc | mcvc verify --suite oracle");
  EXPECT_EQ(oracle.status, 0);
  EXPECT_EQ(oracle.out.find("MISMATCH"), std::string::npos);
  auto bounds = sh("mcvc generate --family prop2 --k 3 | mcvc verify --suite bounds");
  EXPECT_EQ(bounds.status, 0);
  EXPECT_EQ(bounds.out.find("VIOLATION"), std::string::npos);
  auto classes = sh("echo C~ | mcvc verify --suite classes");
  EXPECT_EQ(classes.status, 0);
  EXPECT_NE(classes.out.find("chordal yes"), std::string::npos);
  EXPECT_NE(classes.out.find("split yes"), std::string::npos);
  EXPECT_NE(classes.out.find("cobipartite yes"), std::string::npos);
  EXPECT_NE(classes.out.find("distance_hereditary yes"), std::string::npos);
}

TEST(Cli, Bounds) {
  auto r = sh("mcvc bounds");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("branching_number(1,2) 1.618033989"), std::string::npos);
  EXPECT_NE(r.out.find("f_beta_star 1.8667"), std::string::npos);
}

}  // namespace
