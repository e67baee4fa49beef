#pragma once

#include <gmpxx.h>

#include <string>

namespace bartiler {

/// Arbitrary precision signed integer.
using BigInt = mpz_class;

/// Binomial coefficient with C(n, r) = 0 whenever r < 0 or r > n.
BigInt binomial(long n, long r);

BigInt power(const BigInt& base, unsigned long exp);

std::string to_decimal(const BigInt& value);

/// Parses a decimal string (optional leading '-'); throws std::invalid_argument.
BigInt from_decimal(const std::string& text);

}  // namespace bartiler
