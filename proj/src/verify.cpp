#include "bartiler/verify.hpp"
#include "bartiler/combinatorics.hpp"
#include "bartiler/gf.hpp"
#include "bartiler/symfunc.hpp"
#include "bartiler/tiling.hpp"

#include <stdexcept>

namespace bartiler {

namespace {

using Report = std::vector<CheckResult>;

// f_N(x;1,b^k)
XPoly f_at_a1(int n, int k) {
  Substitution map = Substitution::b_power(k);
  map.a = {1, 0, 0};
  return substitute(f_poly(n), map);
}

void fn_suite(Level level, Report& out) {
  const int top = level == Level::Full ? 12 : 8;
  CheckResult r{"f_N closed form = odd-composition sum, N <= " + std::to_string(top), true, ""};
  for (int n = 1; n <= top && r.passed; ++n) {
    if (f_poly(n, FMode::Closed) != f_poly(n, FMode::Combinatorial)) {
      r.passed = false;
      r.detail = "N = " + std::to_string(n);
    }
  }
  out.push_back(r);
}

void det_suite(Level level, Report& out) {
  const int kmax = level == Level::Full ? 7 : 5;
  CheckResult q{"det(I - A(x)) = f_{k-1}(x;1,b^k), k <= " + std::to_string(kmax), true, ""};
  for (int k = 2; k <= kmax && q.passed; ++k) {
    const PolyMatrix a = build_A(k);
    if (det_poly(PolyMatrix::identity(a.dim()) - a) != f_at_a1(k - 1, k)) {
      q.passed = false;
      q.detail = "k = " + std::to_string(k);
    }
  }
  out.push_back(q);

  const int rmax = level == Level::Full ? 8 : 6;
  CheckResult d{"D_r = phi_r with x_i -> b^(2^(i-1)), r <= " + std::to_string(rmax), true, ""};
  for (int r = 1; r <= rmax && d.passed; ++r) {
    std::vector<XPoly> x;
    for (int i = 0; i < r; ++i) x.emplace_back(BiPoly::monomial(1, 0, 1U << i));
    const PolyMatrix m = build_M(x);
    if (det_poly(PolyMatrix::identity(m.dim()) - m) != phi(r, x)) {
      d.passed = false;
      d.detail = "r = " + std::to_string(r);
    }
  }
  out.push_back(d);
}

void hadamard_suite(Level level, Report& out) {
  const int nmax = level == Level::Full ? 5 : 4;
  const std::size_t order = level == Level::Full ? 30 : 15;
  CheckResult h{"closed Hadamard form = termwise square of 1/p_N, N <= " + std::to_string(nmax) +
                    ", T = " + std::to_string(order),
                true, ""};
  for (int n = 2; n <= nmax && h.passed; ++n) {
    const XSeries inv = series_invert(bar_polynomial(n, BiPoly::b()), order);
    if (rational_to_series(hadamard_rational(n), order) != hadamard_product(inv, inv)) {
      h.passed = false;
      h.detail = "N = " + std::to_string(n);
    }
  }
  out.push_back(h);

  const int kmax = level == Level::Full ? 4 : 3;
  const std::size_t vorder = 20;
  CheckResult v{"1/(1 - V_k) = Hadamard form at b^k, k <= " + std::to_string(kmax), true, ""};
  for (int k = 2; k <= kmax && v.passed; ++k) {
    const RationalGF vk = V_rational(k);
    const RationalGF hk(vk.den(), vk.den() - vk.num());
    const RationalGF had = hadamard_rational(k);
    const RationalGF target(substitute(had.num(), Substitution::b_power(k)),
                            substitute(had.den(), Substitution::b_power(k)));
    if (rational_to_series(hk, vorder) != rational_to_series(target, vorder)) {
      v.passed = false;
      v.detail = "k = " + std::to_string(k);
    }
  }
  out.push_back(v);
}

void oracle_suite(Level level, unsigned threads, Report& out) {
  struct Range {
    int k;
    int n;
  };
  const std::vector<Range> ranges = level == Level::Full
                                        ? std::vector<Range>{{2, 12}, {3, 9}, {4, 8}}
                                        : std::vector<Range>{{2, 8}, {3, 6}};
  OracleLimits limits;
  limits.threads = threads;
  for (const auto& [k, nmax] : ranges) {
    CheckResult r{"F_" + std::to_string(k) + " series = transfer-matrix count, n <= " +
                      std::to_string(nmax),
                  true, ""};
    const XSeries series = rational_to_series(F_main(k), static_cast<std::size_t>(nmax));
    for (int n = 0; n <= nmax && r.passed; ++n) {
      const BiPoly dp = count_tilings(2 * k, n, k, limits);
      if (series[static_cast<std::size_t>(n)] != dp) {
        r.passed = false;
        r.detail = "n = " + std::to_string(n) + ": series " +
                   to_string(series[static_cast<std::size_t>(n)]) + " vs DP " + to_string(dp);
      }
    }
    out.push_back(r);
  }
}

void srht_suite(Level level, Report& out) {
  const int size_max = level == Level::Full ? 16 : 10;
  CheckResult f{"SRHT nonempty <=> Frobenius conditions, unique when nonempty, |lambda| <= " +
                    std::to_string(size_max) + ", k <= 5",
                true, ""};
  for (int total = 2; total <= size_max && f.passed; total += 2) {
    for (const auto& lambda : enumerate_asc(total)) {
      const int d = lambda.rank();
      for (int k = 2; k <= 5 && f.passed; ++k) {
        const int rest = total - k * d;
        if (rest < 0) continue;
        const auto found = srht_enumerate(lambda, hook_type(k, d, rest));
        if (found.size() > 1 || found.empty() == frob_condition(lambda, k)) {
          f.passed = false;
          f.detail = "|lambda| = " + std::to_string(total) + ", k = " + std::to_string(k) +
                     ", first part " + std::to_string(lambda[1]);
        }
      }
    }
  }
  out.push_back(f);

  const int kmax = level == Level::Full ? 6 : 4;
  CheckResult d{"SRHT denominator = f_{k-1}(x;a,-b), k <= " + std::to_string(kmax), true, ""};
  for (int k = 2; k <= kmax && d.passed; ++k) {
    if (denominator_from_srht(k) != substitute(f_poly(k - 1), Substitution::negate_b())) {
      d.passed = false;
      d.detail = "k = " + std::to_string(k);
    }
  }
  out.push_back(d);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "hadamard", "oracle", "fn", "det", "srht"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, Level level, unsigned threads) {
  Report out;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "fn") {
    fn_suite(level, out);
    known = true;
  }
  if (all || suite == "det") {
    det_suite(level, out);
    known = true;
  }
  if (all || suite == "hadamard") {
    hadamard_suite(level, out);
    known = true;
  }
  if (all || suite == "oracle") {
    oracle_suite(level, threads, out);
    known = true;
  }
  if (all || suite == "srht") {
    srht_suite(level, out);
    known = true;
  }
  if (!known) throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

}  // namespace bartiler
