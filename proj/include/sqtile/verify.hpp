#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqtile/formulas.hpp"

namespace sqtile {

struct VerifyOptions {
  std::optional<i64> n_min, n_max;  // override the suite's default range
  unsigned workers = 1;
  ConvCoefficient coefficient = ConvCoefficient::Sigma2Inverse;
  bool inject_fault = false;  // perturbs B(n) by one; exercises the failure path
  bool allow_n8 = false;      // the n = 8 permutation sweep is opt-in
};

struct SuiteResult {
  std::string suite;
  u64 checks = 0, failures = 0;
  std::vector<std::string> notes;     // informational lines
  std::vector<std::string> failed;    // first few failing checks
  bool passed() const { return failures == 0; }

  // `describe` builds the failure message and is only called on failure.
  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++checks;
    if (ok) return;
    ++failures;
    if (failed.size() < 10) failed.push_back(describe());
  }
};

const std::vector<std::string>& suite_names();
// nullopt for an unknown suite name; std::invalid_argument for a range the
// suite cannot honour.
std::optional<SuiteResult> run_suite(std::string_view name, const VerifyOptions& opt);

}  // namespace sqtile
