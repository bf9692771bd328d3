#include <gtest/gtest.h>

#include "qeuler/errors.hpp"
#include "qeuler/verify.hpp"

using namespace qeuler;

TEST(Verify, SmallSuitesPass) {
  VerifyOptions opts;
  opts.n_max = 5;
  for (const char* suite : {"polyring", "th1", "th2", "tableaux", "bijection", "section6"}) {
    const auto report = run_suite(suite, opts);
    EXPECT_TRUE(report.passed()) << report.render();
    EXPECT_FALSE(report.checks.empty()) << suite;
  }
}

TEST(Verify, Th2AtOneIsASingleCheck) {
  VerifyOptions opts;
  opts.n_max = 1;
  const auto report = run_suite("th2", opts);
  ASSERT_EQ(report.checks.size(), 1U);
  EXPECT_TRUE(report.passed());
}

TEST(Verify, RenderIsDeterministicOutsideTiming) {
  VerifyOptions opts;
  opts.n_max = 4;
  auto strip = [](const std::string& text) { return text.substr(0, text.find("# timing")); };
  EXPECT_EQ(strip(run_suite("th1", opts).render()), strip(run_suite("th1", opts).render()));
  EXPECT_NE(run_suite("th1", opts).render().find("status pass"), std::string::npos);
}

TEST(Verify, UnknownSuiteAndBudget) {
  EXPECT_THROW(run_suite("nope"), std::invalid_argument);
  VerifyOptions opts;
  opts.n_max = 20;
  EXPECT_THROW(run_suite("th1", opts), BudgetExceeded);
}

TEST(Verify, BudgetOverrideParsing) {
  const auto o = parse_budget_overrides("th1=4;paths=3,ansatz=2");
  EXPECT_EQ(o.at("th1"), 4);
  EXPECT_EQ(o.at("paths"), 3);
  EXPECT_EQ(o.at("ansatz"), 2);
  EXPECT_THROW(parse_budget_overrides("th1"), std::invalid_argument);
  EXPECT_THROW(parse_budget_overrides("th1=x"), std::invalid_argument);
}

TEST(Verify, SuiteNamesIncludeAll) {
  const auto& names = suite_names();
  EXPECT_NE(std::find(names.begin(), names.end(), "all"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "section5"), names.end());
}
