#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace flagpieri {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::int64_t cases = 0;
  std::string failure;  // first counterexample, empty when passed
};

struct VerifyOptions {
  int max_n = 5;
  int random_polynomials = 1000;
  std::uint64_t seed = 20260915;
};

struct NamedCheck {
  std::string name;
  std::function<CheckResult(const VerifyOptions&)> run;
};

// Every invariant suite of the library, in a fixed order.
const std::vector<NamedCheck>& all_checks();

std::vector<CheckResult> run_checks(const VerifyOptions& options);

}  // namespace flagpieri
