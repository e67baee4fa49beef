#include "bartiler/combinatorics.hpp"
#include "bartiler/gf.hpp"
#include "bartiler/tiling.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <gmpxx.h>

#include <map>
#include <random>

using namespace bartiler;
using namespace oracle;

namespace {

const BiPoly ONE{1};

BiPoly mono(long c, std::uint32_t da, std::uint32_t db) { return BiPoly::monomial(c, da, db); }

XPoly xp(std::vector<BiPoly> c) { return XPoly(std::move(c)); }

std::vector<long> at_one(const XSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coeffs()) out.push_back(c.evaluate(1, 1).get_si());
  return out;
}

XPoly f_with_b(int n, long b_exp, long b_sign = 1, bool a_is_one = false) {
  Substitution map;
  map.b = {b_sign, 0, b_exp};
  if (a_is_one) map.a = {1, 0, 0};
  return substitute(f_poly(n), map);
}

// Univariate over Q, ascending coefficients, trimmed.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly at_a1(const XPoly& p, const mpq_class& b) {
  QPoly out;
  for (const auto& c : p.coeffs()) {
    mpq_class v = 0;
    for (const auto& t : c.terms()) {
      mpq_class pw = 1;
      for (std::uint32_t i = 0; i < t.exp.b; ++i) pw *= b;
      v += mpq_class(t.coeff) * pw;
    }
    out.push_back(v);
  }
  trim(out);
  return out;
}

QPoly rem(QPoly a, const QPoly& b) {
  while (a.size() >= b.size()) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

std::size_t gcd_degree(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() - 1;
}

}  // namespace

TEST_CASE("build_A") {
  const PolyMatrix a4 = build_A(4);
  const BiPoly b4 = mono(1, 0, 4);
  CHECK(a4.at(0, 0).is_zero());
  CHECK(a4.at(0, 1).is_zero());
  CHECK(a4.at(0, 2) == XPoly::term(3, b4));
  CHECK(a4.at(1, 0).is_zero());
  CHECK(a4.at(1, 1) == XPoly::term(2, b4));
  CHECK(a4.at(1, 2) == XPoly::term(3, b4));
  CHECK(a4.at(2, 0) == XPoly::term(1, b4));
  CHECK(a4.at(2, 1) == XPoly::term(2, b4));
  CHECK(a4.at(2, 2) == XPoly::term(3, b4));

  const PolyMatrix a2 = build_A(2);
  CHECK(a2.dim() == 1);
  CHECK(a2.at(0, 0) == XPoly::term(1, mono(1, 0, 2)));

  const PolyMatrix a3 = build_A(3);
  CHECK(a3.at(0, 0).is_zero());
  CHECK(a3.at(0, 1) == XPoly::term(2, mono(1, 0, 3)));
  CHECK(a3.at(1, 0) == XPoly::term(1, mono(1, 0, 3)));
  CHECK(a3.at(1, 1) == XPoly::term(2, mono(1, 0, 3)));
}

TEST_CASE("det_poly") {
  auto det_i_minus = [](const PolyMatrix& a) { return det_poly(PolyMatrix::identity(a.dim()) - a); };
  CHECK(det_i_minus(build_A(2)) == xp({ONE, -mono(1, 0, 2)}));
  CHECK(det_i_minus(build_A(3)) == xp({ONE, BiPoly(), -mono(1, 0, 3), -mono(1, 0, 6)}));

  // z_1 = b, z_2 = b^2, z_3 = b^4
  const PolyMatrix m3 = build_M(independent(3));
  const BiPoly expected = ONE - mono(1, 0, 2) - mono(1, 0, 4) - mono(1, 0, 5) + mono(1, 0, 7);
  CHECK(det_i_minus(m3) == XPoly(expected));

  for (int k = 2; k <= 7; ++k) CHECK(det_i_minus(build_A(k)) == f_with_b(k - 1, k, 1, true));
}

TEST_CASE("adjugate") {
  for (int k = 2; k <= 5; ++k) {
    const PolyMatrix a = build_A(k);
    const PolyMatrix m = PolyMatrix::identity(a.dim()) - a;
    const PolyMatrix prod = m * adjugate(m);
    const XPoly det = det_poly(m);
    for (std::size_t i = 0; i < m.dim(); ++i) {
      for (std::size_t j = 0; j < m.dim(); ++j) CHECK(prod.at(i, j) == (i == j ? det : XPoly()));
    }
  }
}

TEST_CASE("phi") {
  CHECK(phi(3, independent(3)) == assign({{0, 1}, {2, -1}, {4, -1}, {5, -1}, {7, 1}}));
  CHECK(phi(1, independent(1)) == assign({{0, 1}, {1, -1}}));
  for (int k = 2; k <= 7; ++k) {
    std::vector<XPoly> x;
    for (int i = 1; i <= k - 1; ++i) x.push_back(XPoly::term(i, mono(1, 0, k)));
    CHECK(phi(k - 1, x) == f_with_b(k - 1, k, 1, true));
  }
  CHECK_THROWS(phi(3, independent(2)));
}

TEST_CASE("D_r = phi_r and the phi recursion") {
  for (int r = 1; r <= 8; ++r) {
    const auto x = independent(r);
    const PolyMatrix m = build_M(x);
    CHECK(det_poly(PolyMatrix::identity(m.dim()) - m) == phi(r, x));
  }
  for (int r = 1; r <= 8; ++r) CHECK(phi(r, independent(r)) == assign(phi_recursive(r)));
}

TEST_CASE("C(x) counts offset compositions") {
  for (int k = 2; k <= 5; ++k) {
    const XSeries c = rational_to_series(tcomp_gf(k), 14);
    for (int n = 0; n <= 14; ++n) {
      BiPoly expect;
      for (const auto& beta : tcomp_enumerate(n, k)) {
        expect += mono(1, 0, static_cast<std::uint32_t>(k * beta.size()));
      }
      CHECK(c[static_cast<std::size_t>(n)] == expect);
    }
  }
}

TEST_CASE("P_k and Q_k are coprime at random b") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 17);
  for (int k = 2; k <= 5; ++k) {
    const RationalGF c = tcomp_gf(k);
    for (int trial = 0; trial < 20; ++trial) {
      mpq_class b(num(rng), den(rng));
      b.canonicalize();
      if (b == 0) b = 1;
      CAPTURE(k);
      CAPTURE(b.get_str());
      CHECK(gcd_degree(at_a1(c.num(), b), at_a1(c.den(), b)) == 0);
    }
  }
}

TEST_CASE("V_k") {
  for (int k = 2; k <= 4; ++k) {
    const auto ku = static_cast<std::uint32_t>(k);
    const XSeries v = rational_to_series(V_rational(k), 12);
    CHECK(v[0].is_zero());
    CHECK(v[1] == mono(1, 2, 0));
    for (int n = 2; n < k; ++n) CHECK(v[static_cast<std::size_t>(n)].is_zero());
    CHECK(v[ku] == mono(2, ku, ku) + mono(1, 0, 2 * ku));
    for (std::size_t n = 1; n <= 12; ++n) {
      if (!v[n].is_zero()) CHECK(v[n].homogeneous_degree() == 2 * static_cast<long>(n));
    }
  }
  for (int k = 2; k <= 3; ++k) {
    const XSeries v = rational_to_series(V_rational(k), 8);
    for (int n = 0; n <= 8; ++n) {
      CHECK(v[static_cast<std::size_t>(n)] == empirical_series(SeriesKind::V, k, n));
    }
  }
}

TEST_CASE("V_k is 1 - 1/H with the transfer-matrix determinant as denominator") {
  for (int n = 2; n <= 4; ++n) {
    const RationalGF v = V_rational(n);
    const XPoly f_plus = f_with_b(n - 1, n);
    const XPoly d = sqrt_pair_product(bar_polynomial(n, mono(1, 0, n))) * f_with_b(n - 1, n, -1);
    CHECK(v.den() == f_plus);
    CHECK(v.num() == f_plus - d);
    // 1 - 1/H as constructed keeps f_{N-1}(x;a,b) as denominator.
    const RationalGF h = hadamard_rational(n);
    CHECK(exact_quotient(h.num(), f_poly(n - 1)) == XPoly(ONE));
  }
}

TEST_CASE("U_k") {
  const XSeries u2 = rational_to_series(U_rational(2), 6);
  CHECK(u2[2] == mono(1, 2, 2));
  CHECK(u2[4] == mono(1, 2, 6));
  CHECK(u2[6] == mono(1, 2, 10));
  for (int k = 2; k <= 5; ++k) {
    const auto ku = static_cast<std::uint32_t>(k);
    const XSeries u = rational_to_series(U_rational(k), 6 * ku);
    for (std::size_t n = 0; n <= 6 * ku; ++n) {
      if (n % ku != 0 || n == 0) {
        CHECK(u[n].is_zero());
        continue;
      }
      const long ell = static_cast<long>(n / ku);
      const BigInt c = BigInt(k - 1) * binomial(k + ell - 3, ell - 1);
      CHECK(u[n] == BiPoly::monomial(c, ku, static_cast<std::uint32_t>((2 * ell - 1) * k)));
    }
  }
  for (int k = 2; k <= 3; ++k) {
    const XSeries u = rational_to_series(U_rational(k), 9);
    for (int n = 0; n <= 9; ++n) {
      CHECK(u[static_cast<std::size_t>(n)] == empirical_series(SeriesKind::U, k, n));
    }
  }
}

TEST_CASE("Hadamard form") {
  const RationalGF h2 = hadamard_rational(2);
  const XPoly f1 = xp({ONE, -BiPoly::b()});
  CHECK(h2.num() == f1);
  CHECK(h2.den() == xp({ONE, -(mono(1, 2, 0) + mono(2, 0, 1)), mono(1, 0, 2)}) * xp({ONE, BiPoly::b()}));
  CHECK(at_one(rational_to_series(h2, 5)) == std::vector<long>{1, 1, 4, 9, 25, 64});
  for (int n = 2; n <= 5; ++n) {
    const XSeries inv = series_invert(bar_polynomial(n, BiPoly::b()), 30);
    CHECK(rational_to_series(hadamard_rational(n), 30) == hadamard_product(inv, inv));
    CHECK(hadamard_rational(n).num().degree() == n * (n - 1) / 2);
  }
}

TEST_CASE("1/(1 - V_k) is the Hadamard square at b^k") {
  for (int k = 2; k <= 4; ++k) {
    const RationalGF v = V_rational(k);
    const RationalGF h = hadamard_rational(k);
    const RationalGF target(substitute(h.num(), Substitution::b_power(k)),
                            substitute(h.den(), Substitution::b_power(k)));
    CHECK(rational_to_series(RationalGF(v.den(), v.den() - v.num()), 20) ==
          rational_to_series(target, 20));
  }
}

TEST_CASE("F_k") {
  const RationalGF f2 = F_main(2);
  const XPoly common = xp({ONE, -mono(1, 0, 2)});
  CHECK(exact_quotient(f2.num(), common) == xp({ONE, BiPoly(), -mono(1, 0, 4)}));
  CHECK(exact_quotient(f2.den(), common) == xp({ONE, -mono(1, 2, 0), -(mono(3, 2, 2) + mono(2, 0, 4)),
                                                -mono(1, 2, 4), mono(1, 0, 8)}));

  const RationalGF f3 = F_main(3);
  CHECK(f3.num() == xp({ONE, BiPoly(), -mono(1, 1, 3), -mono(3, 0, 6), BiPoly(), mono(2, 1, 9),
                        mono(3, 0, 12), BiPoly(), -mono(1, 1, 15), -mono(1, 0, 18)}));
  CHECK(at_one(rational_to_series(f3, 9)) ==
        std::vector<long>{1, 1, 1, 6, 13, 22, 64, 155, 321, 783});

  for (int k = 2; k <= 6; ++k) {
    const RationalGF f = F_main(k);
    CHECK(f.num().degree() == 3 * k * (k - 1) / 2);
    CHECK(f.den().degree() == 3 * k * (k - 1) / 2 + k);
  }
}

TEST_CASE("F_k series matches the transfer-matrix count") {
  for (int k = 2; k <= 3; ++k) {
    const XSeries s = rational_to_series(F_main(k), 8);
    for (int n = 0; n <= 8; ++n) CHECK(s[static_cast<std::size_t>(n)] == count_tilings(2 * k, n, k));
  }
}

TEST_CASE("big_count") {
  CHECK(big_count(3, 9) == 783);
  CHECK(big_count(2, 4) == 36);
  CHECK(big_count(2, 3) == 11);
  CHECK(big_count(2, 3, 2, 3) == count_tilings(4, 3, 2).evaluate(2, 3));
}
