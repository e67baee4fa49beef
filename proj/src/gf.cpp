#include "bartiler/gf.hpp"
#include "bartiler/combinatorics.hpp"
#include "bartiler/error.hpp"

#include <bit>
#include <string>

namespace bartiler {

PolyMatrix::PolyMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

PolyMatrix PolyMatrix::identity(std::size_t dim) {
  PolyMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = XPoly(BiPoly(1));
  return m;
}

PolyMatrix PolyMatrix::minor(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw Error(Errc::OutOfRange, "minor index");
  PolyMatrix out(dim_ - 1);
  for (std::size_t r = 0, rr = 0; r < dim_; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, cc = 0; c < dim_; ++c) {
      if (c == j) continue;
      out.at(rr, cc++) = at(r, c);
    }
    ++rr;
  }
  return out;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& rhs) {
  if (rhs.dim_ != dim_) throw Error(Errc::SizeMismatch, "matrix dimensions differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs) {
  if (rhs.dim_ != lhs.dim_) throw Error(Errc::SizeMismatch, "matrix dimensions differ");
  const std::size_t n = lhs.dim_;
  PolyMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      XPoly acc;
      for (std::size_t l = 0; l < n; ++l) acc += lhs.at(i, l) * rhs.at(l, j);
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

PolyMatrix build_A(int k) {
  if (k < 2) throw Error(Errc::PreconditionViolated, "build_A needs k >= 2");
  const auto dim = static_cast<std::size_t>(k - 1);
  PolyMatrix a(dim);
  for (int i = 1; i <= k - 1; ++i) {
    for (int j = 1; j <= k - 1; ++j) {
      if (i + j >= k) {
        a.at(i - 1, j - 1) = XPoly::term(j, BiPoly::monomial(1, 0, static_cast<std::uint32_t>(k)));
      }
    }
  }
  return a;
}

XPoly det_poly(const PolyMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return XPoly(BiPoly(1));
  if (n > 24) throw Error(Errc::CapacityExceeded, "det_poly limited to dimension 24");
  // partial[mask]: signed sum over injections of rows 0..popcount(mask)-1
  // onto the columns in mask.
  std::vector<XPoly> partial(std::size_t{1} << n);
  partial[0] = XPoly(BiPoly(1));
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<XPoly> next(partial.size());
    for (std::size_t mask = 0; mask < partial.size(); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != row || partial[mask].is_zero()) continue;
      for (std::size_t col = 0; col < n; ++col) {
        const std::size_t bit = std::size_t{1} << col;
        if ((mask & bit) != 0 || m.at(row, col).is_zero()) continue;
        // Inversions gained: used columns to the right of col.
        const bool odd = std::popcount(mask >> (col + 1)) % 2 == 1;
        XPoly term = partial[mask] * m.at(row, col);
        if (odd) {
          next[mask | bit] -= term;
        } else {
          next[mask | bit] += term;
        }
      }
    }
    partial = std::move(next);
  }
  return partial.back();
}

PolyMatrix adjugate(const PolyMatrix& m) {
  const std::size_t n = m.dim();
  PolyMatrix adj(n);
  if (n == 1) {
    adj.at(0, 0) = XPoly(BiPoly(1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      XPoly cof = det_poly(m.minor(i, j));
      adj.at(j, i) = (i + j) % 2 == 0 ? cof : -cof;
    }
  }
  return adj;
}

PolyMatrix build_M(const std::vector<XPoly>& x) {
  const std::size_t r = x.size();
  PolyMatrix m(r);
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = 1; j <= r; ++j) {
      if (i + j >= r + 1) m.at(i - 1, j - 1) = x[j - 1];
    }
  }
  return m;
}

XPoly phi(int r, const std::vector<XPoly>& x) {
  if (r < 1 || x.size() != static_cast<std::size_t>(r)) {
    throw Error(Errc::SizeMismatch, "phi_r needs exactly r values");
  }
  XPoly total;
  for (const auto& alpha : enumerate_oc(r)) {
    XPoly term(BiPoly(1));
    int partial = 0;
    for (int part : alpha) {
      partial += part;
      term = term * x[sigma(r, partial) - 1];
    }
    if (((alpha.size() + 1) / 2) % 2 == 1) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

RationalGF tcomp_gf(int k) {
  const PolyMatrix a = build_A(k);
  const auto dim = a.dim();
  const PolyMatrix i_minus_a = PolyMatrix::identity(dim) - a;
  const XPoly q = det_poly(i_minus_a);
  const PolyMatrix a_adj = a * adjugate(i_minus_a);

  // v = (b^k x, ..., b^k x^{k-1}), u = all ones.
  const BiPoly bk = BiPoly::monomial(1, 0, static_cast<std::uint32_t>(k));
  XPoly v_dot_u;
  XPoly p;
  for (std::size_t i = 0; i < dim; ++i) {
    const XPoly vi = XPoly::term(i + 1, bk);
    v_dot_u += vi;
    XPoly row_sum;
    for (std::size_t j = 0; j < dim; ++j) row_sum += a_adj.at(i, j);
    p += vi * row_sum;
  }
  // 1 + v u^T + v A (I - A)^{-1} u^T over the common denominator Q.
  const XPoly p_tilde = (XPoly(BiPoly(1)) + v_dot_u) * q + p;
  return RationalGF(p_tilde, q);
}

namespace {

// x -> a^2 x, b -> b/a: turns the a = 1 specialization of a series whose
// x^n coefficient is homogeneous of degree 2n back into the full form.
XPoly rehomogenize(const XPoly& p) {
  Substitution map;
  map.b = {1, -1, 1};
  map.x = {1, 2, 0};
  return substitute(p, map);
}

XPoly one_minus_bx(std::uint32_t b_exp, std::size_t x_exp) {
  return XPoly(BiPoly(1)) - XPoly::term(x_exp, BiPoly::monomial(1, 0, b_exp));
}

}  // namespace

RationalGF V_rational(int k) {
  const RationalGF c = tcomp_gf(k);
  const auto kk = static_cast<std::size_t>(k);
  const auto ku = static_cast<std::uint32_t>(k);
  // x + b^{2k} x^k + 2 b^k x^k C(x)
  const XPoly head = XPoly::term(1, BiPoly(1)) + XPoly::term(kk, BiPoly::monomial(1, 0, 2 * ku));
  const XPoly num = head * c.den() + XPoly::term(kk, BiPoly::monomial(2, 0, ku)) * c.num();
  return RationalGF(rehomogenize(num), rehomogenize(c.den()));
}

RationalGF U_rational(int k) {
  if (k < 2) throw Error(Errc::PreconditionViolated, "U_k needs k >= 2");
  const auto ku = static_cast<std::uint32_t>(k);
  const XPoly num = XPoly::term(ku, BiPoly::monomial(k - 1, ku, ku));
  const XPoly den = one_minus_bx(2 * ku, ku).pow(ku - 1);
  return RationalGF(num, den);
}

RationalGF hadamard_rational(int n) {
  if (n < 2) throw Error(Errc::PreconditionViolated, "Hadamard form needs N >= 2");
  const XPoly f = f_poly(n - 1);
  const XPoly q = sqrt_pair_product(bar_polynomial(static_cast<std::size_t>(n), BiPoly::b()));
  return RationalGF(f, q * substitute(f, Substitution::negate_b()));
}

RationalGF F_main(int k) {
  if (k < 2) throw Error(Errc::PreconditionViolated, "F_k needs k >= 2");
  const auto ku = static_cast<std::uint32_t>(k);
  const XPoly f = f_poly(k - 1);
  const XPoly f_plus = substitute(f, Substitution::b_power(k));
  // b -> -b^k, which is not b -> b^k followed by b -> -b when k is even.
  Substitution minus_bk;
  minus_bk.b = {-1, 0, k};
  const XPoly f_minus = substitute(f, minus_bk);
  const XPoly g = one_minus_bx(2 * ku, ku).pow(ku - 1);
  const XPoly q = sqrt_pair_product(bar_polynomial(ku, BiPoly::monomial(1, 0, ku)));
  const XPoly u = XPoly::term(ku, BiPoly::monomial(k - 1, ku, ku));
  return RationalGF(g * f_plus, q * g * f_minus - u * f_plus);
}

BigInt big_count(int k, std::size_t n, const BigInt& a_val, const BigInt& b_val) {
  return coeff_at(F_main(k), n, a_val, b_val);
}

}  // namespace bartiler
