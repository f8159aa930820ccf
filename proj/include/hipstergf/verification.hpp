#pragma once

#include <string>
#include <vector>

#include "hipstergf/families.hpp"
#include "hipstergf/series.hpp"

namespace hipstergf {

struct VerifyOptions {
  int residual_order = kDefaultOrder;
  int sandwich_order = 1000;
  int ratio_index = 500;
  double tol = 1e-12;
  int oracle_limit_binary = 14;
  int oracle_limit_one2 = 14;
  int oracle_limit_colored = 12;
  int property_cases = 1000;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;   // deterministic; no timings
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool pass = false;
};

/// Runs the full verification battery (oracle equivalence, census
/// calibration, growth endpoints, closed forms, sandwich, residuals, ratio
/// diagnostic, series properties) and reports one result per section.
VerifyReport run_verification(const VerifyOptions& options = {});

/// Compares a candidate coefficient table against the brute-force hipster
/// census for n = 0..limit. On mismatch, appends the offending n to *detail.
bool counts_match_oracle(FamilyId family, const std::vector<Integer>& counts, int limit,
                         std::string* detail = nullptr);

}  // namespace hipstergf
