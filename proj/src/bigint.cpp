#include "bartiler/bigint.hpp"
#include "bartiler/error.hpp"

#include <stdexcept>

namespace bartiler {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::TruncationMismatch: return "TruncationMismatch";
    case Errc::OddTermSurvived: return "OddTermSurvived";
    case Errc::NegativeExponent: return "NegativeExponent";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotOddComposition: return "NotOddComposition";
    case Errc::SumExceedsN: return "SumExceedsN";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::RangeViolation: return "RangeViolation";
    case Errc::MalformedPartition: return "MalformedPartition";
    case Errc::OddTarget: return "OddTarget";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotASC: return "NotASC";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

BigInt binomial(long n, long r) {
  if (r < 0 || r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

BigInt power(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt from_decimal(const std::string& text) {
  BigInt out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  return out;
}

}  // namespace bartiler
