#pragma once

#include <string>
#include <vector>

namespace schubert {

// Knobs for the self-verification suites. Grid bounds are inclusive;
// `trials` scales the randomized suites; `workers` = 0 means one thread
// per hardware core.
struct VerifyOptions {
  int max_r = 3;
  int max_n = 6;
  int max_deg = 6;
  int trials = 200;
  unsigned long long seed = 12345;
  int workers = 0;
};

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> counterexamples;  // first ten
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  long long checks() const;
  long long failures() const;
  bool ok() const { return failures() == 0; }
};

// Names of all suites, in execution order.
std::vector<std::string> verification_suites();

// Runs every suite (or just the named ones) and reports per-suite results.
// Unknown names are an argument error.
VerifyReport run_verification(const VerifyOptions& opts,
                              const std::vector<std::string>& only = {});

}
