#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperinv {

enum class CheckStatus { Pass, Fail, Warn, Info };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  bool extended = false;  // adds the d=4 fourth-rank Cayley-Hamilton run
};

struct VerifyReport {
  std::vector<CheckResult> results;
  double elapsed_seconds = 0.0;  // not part of the formatted report

  bool all_passed() const;
  int count(CheckStatus s) const;
};

/// Runs every acceptance criterion.  Deterministic given the seed: the
/// formatted report is byte-identical across runs.  Published values that
/// disagree with exact recomputation surface as WARN, never FAIL.
VerifyReport run_verification(const VerifyOptions& options);

std::string format_report(const VerifyReport& report);

}  // namespace hyperinv
