#pragma once

// Property suites behind `steenrod verify`. Every suite draws from its own
// generator seeded by (seed, suite name), so results do not depend on
// scheduling.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "steenrod/json_io.hpp"

namespace steenrod {

struct VerifyConfig {
  unsigned p = 2;
  int k = 4;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  bool parallel = true;
  std::vector<std::string> only;  // suite names; empty = all
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<Json> counterexamples;
  std::string error;  // set if the suite threw

  bool ok() const { return failures == 0 && error.empty(); }
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<SuiteResult> suites;  // sorted by name

  bool ok() const;
};

std::uint64_t suite_seed(std::uint64_t seed, const std::string& name);

std::vector<std::string> suite_names();
VerifyReport run_verify(const VerifyConfig& cfg);
SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg);

Json to_json(const VerifyReport& r);

}  // namespace steenrod
