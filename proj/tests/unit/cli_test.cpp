#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "commands.hpp"

using namespace pdep;
using namespace pdep::cli;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("pdep_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    write_file(path, text);
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
  std::ostringstream out_, err_;
};

const char* const kCycle = "x0 -> x1\nx1 ~* x2\nx2 -> x3\nx3 ~* x0\n";
const char* const kTriple = "x0 ~* x1\nx1 ~* x2\n";
const char* const kTeam = "x,y,z,w,weight\n0,0,1,0,1/3\n0,1,0,0,1/3\n1,1,0,0,1/3\n";

}  // namespace

TEST_F(CliTest, ImpliesCycle) {
  EXPECT_EQ(cmd_implies({file("s.dep", kCycle), "x1 -> x0", false, true, ""}, out_, err_), 0);
  EXPECT_EQ(out_.str(), "IMPLIED\noracle: agree\n");
}

TEST_F(CliTest, NotImpliedWritesVerifiedWitness) {
  const auto sigma = file("s.dep", kTriple);
  EXPECT_EQ(cmd_implies({sigma, "x0 x1 -> x2", false, false, path("w.csv")}, out_, err_), 1);
  EXPECT_EQ(out_.str().substr(0, 12), "NOT IMPLIED\n");
  const auto team = parse_team_file(read_file(path("w.csv")));
  EXPECT_TRUE(static_cast<bool>(satisfies_set(team, parse_dependency_file(kTriple))));
  EXPECT_FALSE(satisfies(team, make_fd({0, 1}, {2})));
}

TEST_F(CliTest, ImpliesErrors) {
  const auto sigma = file("s.dep", kTriple);
  EXPECT_EQ(cmd_implies({sigma, "x ~~ y", false, false, ""}, out_, err_), 2);
  EXPECT_EQ(cmd_implies({sigma, "x0 x1 ~ x2", false, false, ""}, out_, err_), 2);
  EXPECT_EQ(cmd_implies({sigma, "x0 ~ x1", true, false, ""}, out_, err_), 2);
  EXPECT_EQ(cmd_implies({path("missing.dep"), "x -> y", false, false, ""}, out_, err_), 2);
  EXPECT_NE(err_.str().find("error:"), std::string::npos);
}

TEST_F(CliTest, ViaUindMatchesEngine) {
  const auto sigma = file("s.dep", "x0 -> x1\nx1 ~ x2\nx2 -> x3\nx3 ~ x0\n");
  EXPECT_EQ(cmd_implies({sigma, "x1 -> x0", true, false, ""}, out_, err_), 0);
  EXPECT_EQ(cmd_implies({sigma, "x1 ~ x3", true, false, ""}, out_, err_), 1);
  EXPECT_EQ(cmd_implies({sigma, "x1 ~ x3", false, false, ""}, out_, err_), 1);
}

TEST_F(CliTest, ArmstrongOutputs) {
  const auto sigma = file("s.dep", "x0 -> x1\nx1 ~ x2\nx2 -> x3\nx3 ~* x0\n-> x4\n-> x5\n");
  EXPECT_EQ(cmd_armstrong({sigma, path("a.csv"), false, 16}, out_, err_), 0);
  EXPECT_EQ(out_.str(), "rows: 4\nweight: 1/4\nsatisfied (x != y): umi=2 umde=14 ufd=14 constancy=2\n");
  EXPECT_EQ(parse_team_file(read_file(path("a.csv"))).num_rows(), 4u);

  out_.str("");
  EXPECT_EQ(cmd_armstrong({file("t.dep", kTriple), path("b.csv"), true, 16}, out_, err_), 0);
  EXPECT_EQ(out_.str().substr(0, 8), "rows: 7\n");

  out_.str("");
  EXPECT_EQ(cmd_armstrong({file("one.dep", "x -> x\n"), path("c.csv"), false, 16}, out_, err_), 0);
  EXPECT_EQ(out_.str().substr(0, 8), "rows: 2\n");

  EXPECT_EQ(cmd_armstrong({file("t.dep", kTriple), path("d.csv"), true, 2}, out_, err_), 2);
}

TEST_F(CliTest, CheckTeam) {
  const auto team = file("team.csv", kTeam);
  EXPECT_EQ(cmd_check({team, "", "x ~ z"}, out_, err_), 0);
  EXPECT_EQ(out_.str(), "SAT   x ~ z\n");
  EXPECT_EQ(cmd_check({team, "", "x ~* w"}, out_, err_), 1);
  EXPECT_EQ(cmd_check({team, file("empty.txt", ""), ""}, out_, err_), 0);
  EXPECT_EQ(cmd_check({team, "", "x -> q"}, out_, err_), 2);
  EXPECT_EQ(cmd_check({team, "", ""}, out_, err_), 2);
  EXPECT_EQ(cmd_check({file("bad.csv", "x,weight\n0,1/2\n"), "", "x ~ x"}, out_, err_), 2);
}

TEST_F(CliTest, ClosureListings) {
  EXPECT_EQ(cmd_closure({file("c.dep", kCycle), "x1", 2}, out_, err_), 0);
  EXPECT_EQ(out_.str(), "x1: x0 x1\n");

  out_.str("");
  EXPECT_EQ(cmd_closure({file("k.dep", "-> x\n"), "y", 2}, out_, err_), 0);
  EXPECT_EQ(out_.str(), "y: x y\n");

  out_.str("");
  EXPECT_EQ(cmd_closure({file("e.dep", ""), "x", 2}, out_, err_), 0);
  EXPECT_EQ(out_.str(), "x: x\n");

  out_.str("");
  EXPECT_EQ(cmd_closure({file("m.dep", "x ~ y\na b -> c\n"), "", 3}, out_, err_), 0);
  EXPECT_EQ(out_.str(), "x ~ y\nx ~* y\na b -> c\n");

  EXPECT_EQ(cmd_closure({file("m.dep", "x ~ y\n"), "1bad", 2}, out_, err_), 2);
}

TEST_F(CliTest, AnswersMatchLibrary) {
  const auto sigma_path = file("s.dep", kCycle);
  auto sigma = parse_dependency_file(kCycle);
  for (const char* text : {"x1 -> x0", "x0 -> x2", "x0 ~* x3", "x0 ~ x1", "x0 x2 -> x1 x3", "-> x0"}) {
    const Atom query = parse_atom(text, sigma.domain());
    const int code = cmd_implies({sigma_path, text, false, true, ""}, out_, err_);
    EXPECT_EQ(code, decide(sigma, query).implied ? 0 : 1) << text;
  }
}
