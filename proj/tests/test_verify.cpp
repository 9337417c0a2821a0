#include "lpcount/verify.hpp"

#include <gtest/gtest.h>

namespace lpcount {
namespace {

TEST(Verify, EverySuitePasses) {
  for (const std::string& name : suite_names()) {
    auto result = run_suite(name, VerifyOptions{7, 14});
    ASSERT_TRUE(result.has_value()) << name;
    EXPECT_TRUE(result->passed) << name << ": " << result->counterexample;
    EXPECT_GT(result->cases, 0u) << name;
  }
}

TEST(Verify, LemmaCoversTheWholeBox) {
  EXPECT_EQ(run_suite("lemma", {})->cases, 9261u);
}

TEST(Verify, UnknownSuite) {
  EXPECT_FALSE(run_suite("nonsense", {}).has_value());
}

TEST(Verify, AllSuitesRunInNameOrderAndAreDeterministic) {
  const auto first = run_all_suites({3, 14});
  const auto second = run_all_suites({3, 14});
  ASSERT_EQ(first.size(), suite_names().size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].name, suite_names()[i]);
    EXPECT_EQ(first[i].cases, second[i].cases);
    EXPECT_TRUE(first[i].passed);
  }
}

}  // namespace
}  // namespace lpcount
