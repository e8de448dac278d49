#include <gtest/gtest.h>

#include "printers.hpp"

#include <sstream>

#include <json.hpp>

#include "cboom/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cboom");
  std::ostringstream out, err;
  const int code = cboom::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, UniformityText) {
  const Result r = run({"uniformity", "--field", "11", "--f", "x^7", "--c", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("beta = 3\n"), std::string::npos) << r.out;
}

TEST(Cli, UniformityJsonSchema) {
  const Result r = run({"uniformity", "--field", "2^4", "--modulus", "Y^4 + Y + 1", "--f", "x^3", "--c", "g", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const char* k : {"field", "f", "c", "beta", "bound", "bound_source", "witnesses", "pass"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["bound"], 9);
  EXPECT_EQ(j["field"]["modulus"], (std::vector<int>{1, 1, 0, 0, 1}));
}

TEST(Cli, OutputIsByteIdentical) {
  const std::vector<std::string> args = {"tight-search", "--field", "11", "--f", "x^7", "--c", "1", "--json", "--seed", "4"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, BctEntry) {
  const Result r = run({"bct", "--field", "5", "--f", "x", "--c", "2", "--a", "1", "--b", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, Verify) {
  EXPECT_EQ(run({"verify", "--fixture", "q191"}).code, 0);
  EXPECT_EQ(run({"verify", "--fixture", "nope"}).code, 2);
}

TEST(Cli, UsageErrorsNameTheFlag) {
  Result r = run({"uniformity", "--field", "12", "--f", "x^3", "--c", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--field"), std::string::npos) << r.err;
  r = run({"uniformity", "--field", "11", "--f", "x^^3", "--c", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--f"), std::string::npos) << r.err;
  r = run({"uniformity", "--field", "11", "--f", "x^3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--c"), std::string::npos) << r.err;
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, EverySubcommandRuns) {
  const std::vector<std::vector<std::string>> cmds = {
      {"bct", "--field", "7", "--f", "x^3", "--c", "2"},
      {"ddt", "--field", "7", "--f", "x^2", "--a", "1", "--b", "3"},
      {"system", "--field", "11", "--f", "x^7", "--c", "1", "--a", "1", "--b", "3"},
      {"groebner", "--field", "11", "--f", "x^3", "--c", "2", "--a", "1", "--b", "3", "--order", "LEX"},
      {"groebner", "--field", "7", "--poly", "z^2 + x", "--poly", "x^3 - 1"},
      {"fglm", "--field", "191", "--f", "x^3", "--c", "11", "--a", "1", "--b", "125"},
      {"factor", "--field", "7", "--f", "x^4 - 1"},
      {"roots-ext", "--field", "11", "--f", "x^2 + 1", "--n", "2"},
      {"dickson", "--field", "11", "--n", "7", "--a", "1"},
      {"polytope-cert", "--field", "11", "--f", "x^7", "--a", "3"},
      {"tight-search", "--field", "191", "--f", "x^3", "--c", "11", "--a", "1", "--b", "125"},
  };
  for (const auto& c : cmds) {
    const Result r = run(c);
    EXPECT_EQ(r.code, 0) << c[0] << ": " << r.err;
    auto with_json = c;
    with_json.push_back("--json");
    const Result rj = run(with_json);
    EXPECT_EQ(rj.code, 0) << c[0];
    EXPECT_TRUE(nlohmann::json::accept(rj.out)) << c[0];
  }
  EXPECT_EQ(run({"dickson", "--field", "11", "--n", "7", "--a", "1"}).out, "x^7 + 4*x^5 + 3*x^3 + 4*x\n");
  EXPECT_EQ(run({"roots-ext", "--field", "11", "--f", "x^2 + 1", "--n", "2"}).out, "2\n");
}

TEST(Cli, FailedVerificationExitsOne) {
  // X^2 over F_5 with c = 1 has bound 0, so the search exhausts
  EXPECT_EQ(run({"tight-search", "--field", "5", "--f", "x^2", "--c", "1"}).code, 1);
}
