#ifndef ZBRX_VERIFY_HPP
#define ZBRX_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "zbrx/report.hpp"

namespace zbrx {

/// One report line: `suite | check | status | witness | counts | time`.
struct CheckRecord {
  std::string suite;
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
  Int counts = 0;
  double time_ms = 0.0;
};

struct VerificationReport {
  std::vector<CheckRecord> records;

  bool any_fail() const;
  bool any_inconclusive() const;
  /// 0: all pass; 1: any fail; 2: inconclusive but no fail.
  int exit_code() const;
};

/// A named, deterministic bundle of checks. Replaying a suite
/// reproduces byte-identical records up to the time field.
struct Suite {
  std::string name;
  std::function<std::vector<CheckResult>()> run;
};

const std::vector<Suite>& builtin_suites();
std::vector<std::string> builtin_suite_names();

/// Runs one builtin suite by name; throws std::invalid_argument on an
/// unknown name.
VerificationReport run_suite(const std::string& name);
/// Names may include "all".
VerificationReport run_suites(const std::vector<std::string>& names);

std::string report_text(const VerificationReport& r);
/// Line-delimited records with the fixed field order
/// suite, check, status, witness, counts, time_ms.
std::string report_machine(const VerificationReport& r);

}  // namespace zbrx

#endif  // ZBRX_VERIFY_HPP
