// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. --extended adds the long-running clauses (levels up to 16, C(16)).

#include <cstring>
#include <iostream>

#include "f2lab/verify.hpp"

int main(int argc, char** argv) {
  f2lab::VerifyOptions opt;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) opt.extended = true;
    if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) opt.jobs = std::atoi(argv[++i]);
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) opt.seed = std::atoll(argv[++i]);
    if (std::strcmp(argv[i], "--samples") == 0 && i + 1 < argc)
      opt.samples = std::atoi(argv[++i]);
  }

  const auto results = f2lab::run_acceptance(opt);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << " — " << r.detail;
    std::cout << "\n";
    ok = ok && r.pass;
  }
  std::cout << (ok ? "acceptance: all criteria pass" : "acceptance: FAILURES above") << "\n";
  return ok ? 0 : 1;
}
