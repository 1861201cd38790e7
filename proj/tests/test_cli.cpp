#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

namespace cli = chainendo::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Eval) {
  const auto r = run({"eval", "--n", "5", "--endo", "(0)_2(2)_2(4)_1", "--point", "3"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, ProjectIdentity) {
  const auto r = run({"project", "--n", "5", "--A", "0,1,2,3,4", "--l", "1", "--m", "3", "--endo",
                      "(0)_1(1)_1(2)_1(3)_1(4)_1"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "(1)_2(2)_1(3)_2\n");
}

TEST(Cli, AddAndCompose) {
  EXPECT_EQ(run({"add", "--n", "5", "--alpha", "(0)_2(2)_2(4)_1", "--beta", "(2)_3(4)_2"}).out, "(2)_3(4)_2\n");
  EXPECT_EQ(run({"compose", "--n", "5", "--alpha", "(0)_2(2)_2(4)_1", "--beta", "(2)_3(4)_2"}).out, "(2)_4(4)_1\n");
}

TEST(Cli, Classify) {
  const auto r = run({"classify", "--n", "5", "--l", "1", "--m", "3", "--endo", "(2)_3(3)_2"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "S: yes\nR: no\nD: yes\n");
}

TEST(Cli, LeibnizViolationExitsOne) {
  const auto r = run({"leibniz", "--n", "5", "--l", "1", "--m", "3", "--alpha", "(0)_1(1)_1(2)_1(3)_1(4)_1",
                      "--beta", "(0)_1(2)_2(4)_2", "--format", "json"});
  EXPECT_EQ(r.code, cli::kExitViolated);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["lhs"]["table"], (std::vector<int>{1, 2, 2, 3, 3}));
  EXPECT_EQ(j["rhs"]["table"], (std::vector<int>{2, 2, 2, 4, 4}));
  EXPECT_FALSE(j["holds"].get<bool>());
}

TEST(Cli, VerifyJson) {
  const auto r = run({"verify", "--claim", "theorem-leibniz", "--n-max", "5", "--format", "json"});
  EXPECT_EQ(r.code, cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["claim"], "theorem-leibniz");
  EXPECT_EQ(j["violations"], 0);
  EXPECT_GT(j["searched"].get<std::uint64_t>(), 0u);
  EXPECT_TRUE(j["witnesses"].empty());
}

TEST(Cli, VerifyViolatedExitsOne) {
  const auto r = run({"verify", "--claim", "top-section-intersection", "--n-max", "4", "--max-witnesses", "2"});
  EXPECT_EQ(r.code, cli::kExitViolated);
  EXPECT_NE(r.out.find("VIOLATED"), std::string::npos);
  EXPECT_NE(r.out.find("witness:"), std::string::npos);
}

TEST(Cli, CountAndEnumerate) {
  EXPECT_EQ(run({"count", "--n", "5", "--set", "ON"}).out, "42\n");
  EXPECT_EQ(run({"count", "--n", "5", "--set", "top", "--p", "3"}).out, "15\n");
  EXPECT_EQ(run({"enumerate", "--n", "3", "--set", "N"}).out, "(0)_3\n(0)_2(1)_1\n");
  const auto j = nlohmann::json::parse(run({"enumerate", "--n", "3", "--A", "0,2", "--format", "json"}).out);
  EXPECT_EQ(j["count"], 4);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"eval", "--n", "5", "--endo", "(0)_2(2)_2", "--point", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--claim", "lemma9"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"count", "--n", "5", "--set", "S"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"project", "--n", "5", "--l", "3", "--m", "1", "--endo", "(0)_5"}).code, cli::kExitUsage);
  const auto r = run({"eval", "--n", "5", "--endo", "(0)_2(2_3", "--point", "0"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("position 7"), std::string::npos);
}

TEST(Cli, CeilingFlagAndEnvironment) {
  EXPECT_EQ(run({"count", "--n", "12", "--set", "ON", "--ceiling", "10"}).code, cli::kExitUsage);
  ::setenv("CHAIN_ENDO_CEILING", "10", 1);
  const int code = run({"count", "--n", "12", "--set", "ON"}).code;
  ::unsetenv("CHAIN_ENDO_CEILING");
  EXPECT_EQ(code, cli::kExitUsage);
  EXPECT_EQ(run({"count", "--n", "4", "--set", "ON"}).out, "14\n");
}
