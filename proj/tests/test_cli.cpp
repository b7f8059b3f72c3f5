#include <gtest/gtest.h>

#include <sstream>

#include "coinrace_cli.hpp"

using namespace coinrace;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args, const DistributionBuilder& builder = {}) {
  args.insert(args.begin(), "coinrace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = coinrace::cli::run(static_cast<int>(argv.size()), argv.data(), out, err, builder);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, PolyText) {
  auto r = invoke({"poly", "--n", "3", "--alpha", "1", "--beta", "1", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 - 2p + 5p^2 - 4p^3 + p^4\n");
  r = invoke({"poly", "--n", "2", "--alpha", "2", "--beta", "1"});
  EXPECT_EQ(r.out, "1 (degenerate: I ≡ 1)\n");
}

TEST(Cli, PolyRejectsNonPositive) {
  const auto r = invoke({"poly", "--n", "5", "--alpha", "0", "--beta", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("alpha must be > 0"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, PolyJsonRoundTrip) {
  const auto r = invoke({"poly", "--n", "7", "--alpha", "1", "--beta", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["degree"], 12);
  EXPECT_EQ(doc["degenerate"], false);
  std::vector<Rational> coeffs;
  for (const auto& c : doc["coefficients"]) coeffs.push_back(parse_rational(c.get<std::string>()));
  const Poly parsed(coeffs);
  EXPECT_EQ(parsed.eval(Rational(1, 2)), advantage_at(GameParams{7, 1, 2}, Rational(1, 2)));
}

TEST(Cli, RationalArgumentsAgree) {
  const auto a = invoke({"poly", "--n", "9/2", "--alpha", "3/2", "--beta", "1", "--format", "json"});
  const auto b = invoke({"poly", "--n", "4.5", "--alpha", "1.5", "--beta", "1.0", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(invoke({"poly", "--n", "x", "--alpha", "1", "--beta", "1"}).code, 2);
}

TEST(Cli, PmfFormats) {
  auto r = invoke({"pmf", "--n", "3", "--alpha", "1", "--beta", "1"});
  EXPECT_EQ(r.out, "k=2: 2p - p^2\nk=3: 1 - 2p + p^2\n");
  r = invoke({"pmf", "--n", "2", "--alpha", "2", "--beta", "1"});
  EXPECT_EQ(r.out, "k=1: 1\n");
  r = invoke({"pmf", "--n", "3", "--alpha", "1", "--beta", "1", "--format", "json"});
  EXPECT_EQ(json::parse(r.out), json::parse(R"({"l":2,"m":3,"pmf":{"2":[0,2,-1],"3":[1,-2,1]}})"));
  r = invoke({"pmf", "--n", "3", "--alpha", "1", "--beta", "1", "--format", "csv"});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "k,power,coefficient");
}

TEST(Cli, Minimize) {
  auto r = invoke({"minimize", "--n", "5", "--alpha", "1", "--beta", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto doc = json::parse(r.out);
  EXPECT_NEAR(doc["value"].get<double>(), 0.700, 5e-4);
  EXPECT_GT(doc["p_star_n"].get<double>(), 0.0);
  r = invoke({"minimize", "--n", "10", "--alpha", "1", "--beta", "1", "--format", "json"});
  EXPECT_NEAR(json::parse(r.out)["value"].get<double>(), 0.643, 5e-4);
  r = invoke({"minimize", "--n", "2", "--alpha", "2", "--beta", "1"});
  EXPECT_EQ(r.out, "degenerate: advantage is 1 for every p\n");
  EXPECT_EQ(invoke({"minimize", "--n", "5", "--alpha", "1", "--beta", "1", "--tol", "0"}).code, 2);
}

TEST(Cli, Pstar) {
  auto r = invoke({"pstar", "--alpha", "1", "--beta", "1"});
  EXPECT_EQ(r.out.substr(0, 16), "p* = 0.267949192");
  r = invoke({"pstar", "--alpha", "2", "--beta", "1"});
  EXPECT_EQ(r.out.substr(0, 16), "p* = 0.354248688");
  r = invoke({"pstar", "--alpha", "1", "--beta", "2"});
  EXPECT_EQ(r.out.substr(0, 16), "p* = 0.177124344");
  EXPECT_EQ(invoke({"pstar", "--alpha", "-1", "--beta", "2"}).code, 2);
}

TEST(Cli, Simulate) {
  auto r = invoke({"simulate", "--n", "5", "--alpha", "1", "--beta", "1", "--p", "0", "--trials", "100", "--seed", "7",
                "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["frequency"].get<double>(), 1.0);
  r = invoke({"simulate", "--n", "5", "--alpha", "1", "--beta", "1", "--at-pstar", "--trials", "100000", "--seed", "7",
           "--format", "json"});
  const auto doc = json::parse(r.out);
  EXPECT_LE(std::abs(doc["frequency"].get<double>() - 0.700), 4 * doc["stderr"].get<double>() + 5e-4);
  EXPECT_EQ(invoke({"simulate", "--n", "5", "--alpha", "1", "--beta", "1", "--p", "1.5"}).code, 2);
  EXPECT_EQ(invoke({"simulate", "--n", "5", "--alpha", "1", "--beta", "1"}).code, 2);
  EXPECT_EQ(invoke({"simulate", "--n", "5", "--alpha", "1", "--beta", "1", "--p", "0.5", "--at-pstar"}).code, 2);
}

TEST(Cli, Tables) {
  auto r = invoke({"table", "1", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 13u);  // header + 12 rows
  EXPECT_NE(r.out.find("3,1,1,4,\"1 - 2p + 5p^2 - 4p^3 + p^4\""), std::string::npos);
  r = invoke({"table", "3", "--format", "csv"});
  EXPECT_NE(r.out.find("\n2,2,1,0,\"1\"\n4,2,1,0,\"1\"\n"), std::string::npos);
  r = invoke({"table", "5", "--format", "latex"});
  EXPECT_NE(r.out.find("9 & $1 - p^{2} + p^{4}$ \\\\"), std::string::npos);
  EXPECT_EQ(invoke({"table", "7"}).code, 2);
  EXPECT_EQ(invoke({"table", "0"}).code, 2);
}

TEST(Cli, TableSixAnnotatesSuspectRows) {
  const auto r = invoke({"table", "6", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 19u);
  EXPECT_NE(r.out.find("5,1,1,0.700,0.700,\"\""), std::string::npos);
  EXPECT_NE(r.out.find("20,2,3,"), std::string::npos);
  EXPECT_NE(r.out.find("repeats the (20,2,1) values"), std::string::npos);
}

TEST(Cli, Verify) {
  auto r = invoke({"verify", "--max-n", "8", "--max-alpha", "3", "--max-beta", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "72/72 cases match\n");
  r = invoke({"verify", "--max-n", "1", "--max-alpha", "1", "--max-beta", "1"});
  EXPECT_EQ(r.out, "1/1 cases match\n");
}

TEST(Cli, VerifyReportsCorruptedBuild) {
  const DistributionBuilder corrupted = [](const NormalizedParams& p) {
    auto d = tau_distribution(p);
    if (p.n == 5 && p.alpha == 1 && p.beta == 2) d.pmf.at(d.bounds.m) += Poly{0, 1, -1};
    return d;
  };
  const auto r = invoke({"verify", "--max-n", "6", "--max-alpha", "2", "--max-beta", "2"}, corrupted);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("23/24 cases match"), std::string::npos);
  EXPECT_NE(r.out.find("mismatch n=5 alpha=1 beta=2 k=5"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"poly", "--n", "3"}).code, 2);
  EXPECT_EQ(invoke({"poly", "--n", "3", "--alpha", "1", "--beta", "1", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}
