// The end-to-end verification suite run by `a4int verify`.
#pragma once

#include "a4/report.hpp"

#include <string>
#include <vector>

namespace a4 {

struct CheckResult {
  std::string id;
  std::string description;
  std::string reference;  // the published result the check reproduces
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct VerifyOptions {
  /// Fault injection for testing the suite itself: adds 1 to b_0 of the
  /// embedded curve data.
  bool corrupt_b0 = false;
  /// Number of random cases per oracle comparison.
  unsigned oracle_cases = 200;
};

std::vector<CheckResult> run_verification(Session& session, const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& checks);

OutputDocument verification_document(const std::vector<CheckResult>& checks);

}  // namespace a4
