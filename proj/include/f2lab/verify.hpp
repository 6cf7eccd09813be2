#pragma once

// Verification suites: the acceptance checks behind `verify` and the
// acceptance test binary. Each check recomputes its claim from scratch
// through the public operations and reports one pass/fail result.

#include <cstdint>
#include <string>
#include <vector>

namespace f2lab {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  uint64_t seed = 0;
  int samples = 100000;
  bool extended = false;
  int jobs = 1;
};

// Suites: thm18 (hull-ratio law + product witness), thm19 (cover law +
// G3/G4 witnesses), kneser (sumset inequality on seeded random sets),
// rank (method agreement corpus), galois (enumeration counts + cover
// search cross-validation), all.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

// The ten acceptance criteria; extended clauses only with opt.extended.
std::vector<CheckResult> run_acceptance(const VerifyOptions& opt);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace f2lab
