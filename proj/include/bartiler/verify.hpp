#pragma once

// Named invariant suites, run by `bartiler verify`.

#include <string>
#include <vector>

namespace bartiler {

enum class Level { Quick, Full };

struct CheckResult {
  std::string name;
  bool passed = false;
  /// First counterexample, or a short summary on success.
  std::string detail;
};

/// all, hadamard, oracle, fn, det, srht
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, Level level, unsigned threads = 1);

}  // namespace bartiler
