#ifndef ZBRX_REPORT_HPP
#define ZBRX_REPORT_HPP

#include <string>
#include <vector>

#include "zbrx/monoid.hpp"

namespace zbrx {

enum class CheckStatus { Pass, Fail, Inconclusive };

std::string to_string(CheckStatus s);

/// One verified claim. A Fail always carries a replayable witness;
/// Inconclusive means the symbolic machinery could not decide (an
/// undecidable descriptor form), never a silent wrong answer.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // counterexample or positive witness, replayable
  Int count = 0;        // elements / products / pairs examined

  static CheckResult pass(std::string name, Int count, std::string witness = "") {
    return {std::move(name), CheckStatus::Pass, std::move(witness), count};
  }
  static CheckResult fail(std::string name, Int count, std::string witness) {
    return {std::move(name), CheckStatus::Fail, std::move(witness), count};
  }
  static CheckResult inconclusive(std::string name, Int count,
                                  std::string witness) {
    return {std::move(name), CheckStatus::Inconclusive, std::move(witness),
            count};
  }
};

}  // namespace zbrx

#endif  // ZBRX_REPORT_HPP
