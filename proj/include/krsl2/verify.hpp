#pragma once

// Named verification checks shared by the CLI and the acceptance harness.

#include <string>
#include <vector>

#include "krsl2/mfact.hpp"

namespace krsl2 {

struct VerifyOptions {
  std::vector<std::string> only;  // empty runs everything
  bool mf_only = false;           // just the factorization checks
  bool corrupt_u0 = false;        // fault injection for testing the harness
  int jobs = 1;
};

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
  double seconds = 0;
};

// All check names in run order; the factorization checks come first.
std::vector<std::string> check_names(bool mf_only = false);

// Throws std::invalid_argument when `only` names an unknown check.
std::vector<CheckResult> run_checks(const VerifyOptions& opts);

// Lambda_0 with U0 entry (2,1) perturbed by x1.
MFMorphism corrupted_lambda0();

// Individual corpus checks, also used by the acceptance harness.
CheckResult check_closed_webs(int jobs = 1);
CheckResult check_euler(int jobs = 1);
CheckResult check_reidemeister(int jobs = 1);
CheckResult check_distinct_roots(int jobs = 1);
CheckResult check_double_root(int jobs = 1);
CheckResult check_degree_formula(int jobs = 1);

}  // namespace krsl2
