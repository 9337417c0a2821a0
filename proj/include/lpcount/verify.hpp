#pragma once

// Named invariant suites behind `lpcount verify`. Each suite is exhaustive
// over a small box, plus seeded random samples where noted.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lpcount {

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t theorem_cap = 14;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string counterexample;  // empty when passed
};

/// cross-engine, ballot, rectangle, polytope, bijection, macmahon, monomial,
/// symbolic, det-identity, lemma, vandermonde, telescoping, children, reduced-step,
/// memo.
const std::vector<std::string>& suite_names();

/// std::nullopt for an unknown suite name.
std::optional<SuiteResult> run_suite(std::string_view name, const VerifyOptions& options);

/// Runs every suite, concurrently. Results come back in suite_names() order.
std::vector<SuiteResult> run_all_suites(const VerifyOptions& options);

}  // namespace lpcount
