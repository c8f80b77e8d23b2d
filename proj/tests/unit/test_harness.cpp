#include <gtest/gtest.h>

#include <set>

#include "sl2coh/harness/suite.hpp"

using namespace sl2coh::harness;

TEST(Grid, ParseValues) {
  EXPECT_EQ(parse_values("2,3"), (std::vector<int>{2, 3}));
  EXPECT_EQ(parse_values("1..3"), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(parse_values("5, 0..1, 1"), (std::vector<int>{0, 1, 5}));
  EXPECT_THROW(parse_values(""), ConfigError);
  EXPECT_THROW(parse_values("3..1"), ConfigError);
  EXPECT_THROW(parse_values("x"), ConfigError);
}

TEST(Grid, ParseSpecKeepsUnmentionedAxes) {
  Grid g = parse_grid("p=5;m=1..3");
  EXPECT_EQ(g.p, (std::vector<int>{5}));
  EXPECT_EQ(g.m, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(g.r, Grid{}.r);
  EXPECT_EQ(parse_grid(format_grid(g)), g);
  EXPECT_THROW(parse_grid("q=2"), ConfigError);
  EXPECT_THROW(parse_grid("p"), ConfigError);
}

TEST(Config, Validation) {
  SuiteConfig c;
  EXPECT_NO_THROW(validate(c));
  c.grid.p = {4};
  EXPECT_THROW(validate(c), ConfigError);
  c = {};
  c.suites = {"nope"};
  EXPECT_THROW(validate(c), ConfigError);
  c = {};
  c.grid.r = {0};
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(Report, JsonRoundTrip) {
  SuiteConfig c;
  c.suites = {"witt", "lemma"};
  c.grid.p = {2};
  VerificationReport r = run_suite(c);
  r.checks.push_back({"witt", "synthetic", {{"p", 7}}, Status::fail, "X*Y", "why", 0.125});
  r.checks.push_back({"cup", "synthetic", {}, Status::skipped, "", "cap", 0});
  const auto text = to_json(r).dump();
  EXPECT_EQ(report_from_json(nlohmann::json::parse(text)), r);
  EXPECT_FALSE(r.passed());
}

TEST(Report, RejectsTampering) {
  VerificationReport r = run_suite(SuiteConfig{.suites = {"lemma"}});
  auto j = to_json(r);
  j["summary"]["pass"] = 99;
  EXPECT_THROW(report_from_json(j), ConfigError);
  j = to_json(r);
  j["checks"][0]["status"] = "maybe";
  EXPECT_THROW(report_from_json(j), ConfigError);
  j = to_json(r);
  j.erase("schema");
  EXPECT_THROW(report_from_json(j), ConfigError);
}

TEST(Report, Markdown) {
  VerificationReport r = run_suite(SuiteConfig{.suites = {"lemma"}});
  const std::string md = to_markdown(r);
  EXPECT_NE(md.find("| lemma | lemma.e_alpha |  | pass |"), std::string::npos) << md;
  EXPECT_NE(md.find("2 pass, 0 fail, 0 skipped"), std::string::npos);
}

TEST(Suite, EveryGridPointOncePerCheck) {
  SuiteConfig c;
  c.suites = {"witt", "universal"};
  c.grid = parse_grid("p=2,3;r=1..2;j=0..1;m=1..2");
  VerificationReport r = run_suite(c);
  std::set<std::pair<std::string, std::string>> seen;
  std::map<std::string, int> per_check;
  for (const auto& rec : r.checks) {
    EXPECT_TRUE(seen.insert({rec.name, format_params(rec.params)}).second) << rec.name;
    ++per_check[rec.name];
  }
  EXPECT_EQ(per_check["witt.cocycle"], 4);
  EXPECT_EQ(per_check["universal.cocycle"], 16);
  EXPECT_TRUE(r.passed());
}

TEST(Suite, OrderFollowsSuiteList) {
  SuiteConfig c;
  c.suites = {"lemma", "witt"};
  c.grid.p = {2};
  c.grid.r = {1};
  VerificationReport r = run_suite(c);
  ASSERT_FALSE(r.checks.empty());
  EXPECT_EQ(r.checks.front().suite, "witt");
  EXPECT_EQ(r.checks.back().suite, "lemma");
}

TEST(Suite, FilterAndCaps) {
  SuiteConfig c;
  c.suites = {"cup"};
  c.grid = parse_grid("p=2;r=1;m=1..5");
  c.samples = 4;
  c.include = [](const std::string&, const Params& p) { return !p.count("m") || p.at("m") != 2; };
  VerificationReport r = run_suite(c);
  std::map<int, Status> cocycle;
  for (const auto& rec : r.checks)
    if (rec.name == "cup.cocycle") cocycle[rec.params.at("m")] = rec.status;
  EXPECT_EQ(cocycle.count(2), 0u);
  EXPECT_EQ(cocycle[4], Status::pass);
  EXPECT_EQ(cocycle[5], Status::skipped);
}

TEST(Suite, CertifiedCupPointsAreLabelled) {
  SuiteConfig c;
  c.suites = {"cup"};
  c.grid = parse_grid("p=3;r=2;m=2");
  c.samples = 4;
  c.direct_cup_terms = 10;
  VerificationReport r = run_suite(c);
  bool found = false;
  for (const auto& rec : r.checks)
    if (rec.name == "cup.cocycle") {
      found = true;
      EXPECT_EQ(rec.status, Status::pass);
      EXPECT_EQ(rec.message.rfind("certified", 0), 0u);
    }
  EXPECT_TRUE(found);
}

TEST(Suite, SeedChangesNothingForExactChecks) {
  SuiteConfig a, b;
  a.suites = b.suites = {"exactalg"};
  a.samples = b.samples = 10;
  b.seed = 1;
  EXPECT_TRUE(run_suite(a).passed());
  EXPECT_TRUE(run_suite(b).passed());
}
