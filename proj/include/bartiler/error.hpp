#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bartiler {

enum class Errc {
  NonUnitConstantTerm,
  TruncationMismatch,
  OddTermSurvived,
  NegativeExponent,
  OutOfRange,
  NotOddComposition,
  SumExceedsN,
  CapacityExceeded,
  PreconditionViolated,
  RangeViolation,
  MalformedPartition,
  OddTarget,
  SizeMismatch,
  NotASC,
};

std::string_view errc_name(Errc code) noexcept;

/// All library failures are reported through this exception; `code()`
/// identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bartiler
