#pragma once

// Generating functions for 2k x n bar tilings: the transfer-matrix route to
// V_k, the closed forms U_k and the Hadamard product H, and F_k itself.
// Nothing here is reduced to lowest terms.

#include "bartiler/bigint.hpp"
#include "bartiler/poly.hpp"

#include <cstddef>
#include <vector>

namespace bartiler {

/// Square matrix of XPoly entries, row-major.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t dim);

  static PolyMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  XPoly& at(std::size_t i, std::size_t j) { return entries_.at(i * dim_ + j); }
  const XPoly& at(std::size_t i, std::size_t j) const { return entries_.at(i * dim_ + j); }

  /// Deletes row i and column j.
  PolyMatrix minor(std::size_t i, std::size_t j) const;

  PolyMatrix& operator-=(const PolyMatrix& rhs);
  friend PolyMatrix operator-(PolyMatrix lhs, const PolyMatrix& rhs) { return lhs -= rhs; }
  friend PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs);

  bool operator==(const PolyMatrix&) const = default;

 private:
  std::size_t dim_;
  std::vector<XPoly> entries_;
};

/// (k-1) x (k-1), entry (i,j) = b^k x^j when i + j >= k (1-based).
PolyMatrix build_A(int k);

/// Cofactor expansion over rows, memoized on the set of used columns.
XPoly det_poly(const PolyMatrix& m);

/// Transposed cofactor matrix, so m * adjugate(m) = det(m) I.
PolyMatrix adjugate(const PolyMatrix& m);

/// r x r matrix with entry (i,j) = x_j when i + j >= r + 1 (1-based).
PolyMatrix build_M(const std::vector<XPoly>& x);

/// Signed sum over odd compositions alpha of integers <= r of
/// (-1)^floor((l(alpha)+1)/2) times the product of x_{sigma_r(partial sum)}.
XPoly phi(int r, const std::vector<XPoly>& x);

/// C(x) = P~/Q with Q = det(I - A), in the variables b and x (a = 1).
RationalGF tcomp_gf(int k);

/// V_k(x;a,b) from C(x), rehomogenized in a.
RationalGF V_rational(int k);

/// (k-1) a^k b^k x^k / (1 - b^{2k} x^k)^{k-1}
RationalGF U_rational(int k);

/// f_{N-1}(x;a,b) / (p_N(sqrt x) p_N(-sqrt x) f_{N-1}(x;a,-b)), p_N = 1 - ax - bx^N.
RationalGF hadamard_rational(int n);

/// Sum over n of t(2k,n;k) x^n, as the unreduced product form.
RationalGF F_main(int k);

/// Number of tilings of a 2k x n rectangle, from the recurrence of F_main(k).
BigInt big_count(int k, std::size_t n, const BigInt& a_val = 1, const BigInt& b_val = 1);

}  // namespace bartiler
