#pragma once

// Exact arithmetic over Z[a,b][x]: weight polynomials, x-polynomials,
// truncated series and unreduced rational generating functions.

#include "bartiler/bigint.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bartiler {

/// Exponent pair of a^deg_a b^deg_b.
struct Monomial {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  auto operator<=>(const Monomial&) const = default;
};

/// Sparse polynomial in a and b with integer coefficients.
///
/// Terms are kept sorted by ascending (deg_a, deg_b) and zero coefficients are
/// never stored, so structural equality is polynomial equality.
class BiPoly {
 public:
  struct Term {
    Monomial exp;
    BigInt coeff;

    bool operator==(const Term&) const = default;
  };

  BiPoly() = default;
  explicit BiPoly(long constant);
  explicit BiPoly(const BigInt& constant);

  static BiPoly monomial(const BigInt& coeff, std::uint32_t deg_a, std::uint32_t deg_b);
  static BiPoly a() { return monomial(1, 1, 0); }
  static BiPoly b() { return monomial(1, 0, 1); }
  /// Builds from arbitrary (possibly repeated, unsorted, zero) terms.
  static BiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  BigInt coeff(std::uint32_t deg_a, std::uint32_t deg_b) const;

  /// Degree in a+b if homogeneous, -1 for zero, -2 if not homogeneous.
  long homogeneous_degree() const;

  BigInt evaluate(const BigInt& a_val, const BigInt& b_val) const;
  BiPoly times_monomial(std::uint32_t deg_a, std::uint32_t deg_b) const;
  BiPoly pow(unsigned exp) const;

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly& operator*=(const BigInt& scalar);

  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
  friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
  friend BiPoly operator*(BiPoly lhs, const BigInt& rhs) { return lhs *= rhs; }
  BiPoly operator-() const;

  bool operator==(const BiPoly&) const = default;

 private:
  std::vector<Term> terms_;
};

/// Dense polynomial in x with BiPoly coefficients; trailing zeros trimmed.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<BiPoly> coeffs);
  explicit XPoly(const BiPoly& constant);

  /// c * x^n
  static XPoly term(std::size_t n, const BiPoly& c);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BiPoly>& coeffs() const { return coeffs_; }
  /// Zero beyond the degree.
  const BiPoly& operator[](std::size_t i) const;

  XPoly shifted(std::size_t n) const;
  XPoly pow(unsigned exp) const;
  /// Sign flip on odd powers: p(-x).
  XPoly negate_x() const;

  XPoly& operator+=(const XPoly& rhs);
  XPoly& operator-=(const XPoly& rhs);
  XPoly& operator*=(const BiPoly& scalar);

  friend XPoly operator+(XPoly lhs, const XPoly& rhs) { return lhs += rhs; }
  friend XPoly operator-(XPoly lhs, const XPoly& rhs) { return lhs -= rhs; }
  friend XPoly operator*(const XPoly& lhs, const XPoly& rhs);
  friend XPoly operator*(XPoly lhs, const BiPoly& rhs) { return lhs *= rhs; }
  XPoly operator-() const;

  bool operator==(const XPoly&) const = default;

 private:
  void trim();

  std::vector<BiPoly> coeffs_;
};

/// Power series truncated after x^order; always holds order+1 coefficients.
class XSeries {
 public:
  explicit XSeries(std::size_t order);
  XSeries(std::size_t order, const XPoly& poly);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<BiPoly>& coeffs() const { return coeffs_; }
  const BiPoly& operator[](std::size_t i) const { return coeffs_.at(i); }
  BiPoly& operator[](std::size_t i) { return coeffs_.at(i); }

  XSeries& operator+=(const XSeries& rhs);
  XSeries& operator-=(const XSeries& rhs);
  friend XSeries operator+(XSeries lhs, const XSeries& rhs) { return lhs += rhs; }
  friend XSeries operator-(XSeries lhs, const XSeries& rhs) { return lhs -= rhs; }
  friend XSeries operator*(const XSeries& lhs, const XSeries& rhs);

  bool operator==(const XSeries&) const = default;

 private:
  std::vector<BiPoly> coeffs_;
};

/// num/den with den(0) = 1. Never reduced to lowest terms.
class RationalGF {
 public:
  RationalGF(XPoly num, XPoly den);

  const XPoly& num() const { return num_; }
  const XPoly& den() const { return den_; }

  /// Equality as rational functions, by cross multiplication.
  bool equivalent(const RationalGF& other) const;

  bool operator==(const RationalGF&) const = default;

 private:
  XPoly num_;
  XPoly den_;
};

BiPoly bipoly_arith(const BiPoly& p, const BiPoly& q, char op);

/// S with p*S = 1 mod x^(order+1). Requires p(0) = 1.
XSeries series_invert(const XPoly& p, std::size_t order);

/// Coefficientwise product.
XSeries hadamard_product(const XSeries& lhs, const XSeries& rhs);

XSeries rational_to_series(const RationalGF& r, std::size_t order);

/// Coefficient of x^n after substituting a, b; linear recurrence with
/// O(deg den) live values.
BigInt coeff_at(const RationalGF& r, std::size_t n, const BigInt& a_val, const BigInt& b_val);

/// Streams coefficients 0..n_max at (a_val, b_val) to `sink`.
void coeff_stream(const RationalGF& r, std::size_t n_max, const BigInt& a_val,
                  const BigInt& b_val,
                  const std::function<void(std::size_t, const BigInt&)>& sink);

/// q with q(x^2) = p(x) p(-x).
XPoly sqrt_pair_product(const XPoly& p);

/// Exact quotient num/den when den(0) = 1 and den divides num; throws
/// PreconditionViolated otherwise.
XPoly exact_quotient(const XPoly& num, const XPoly& den);

/// Monomial substitution. Each variable maps to coeff * a^a_exp * b^b_exp;
/// exponents may be negative as long as every resulting term is polynomial.
/// The x image scales the coefficient of x^n by image^n.
struct Substitution {
  struct Image {
    BigInt coeff;
    long a_exp;
    long b_exp;
  };
  Image a{1, 1, 0};
  Image b{1, 0, 1};
  Image x{1, 0, 0};

  /// b -> b^k
  static Substitution b_power(long k);
  /// b -> -b
  static Substitution negate_b();
};

BiPoly substitute(const BiPoly& p, const Substitution& map);
XPoly substitute(const XPoly& p, const Substitution& map);

std::vector<BigInt> evaluate(const XPoly& p, const BigInt& a_val, const BigInt& b_val);

/// 1 - a x - c x^n
XPoly bar_polynomial(std::size_t n, const BiPoly& c);

std::string to_string(const BiPoly& p);
std::string to_string(const XPoly& p);

}  // namespace bartiler
