#include "bartiler/combinatorics.hpp"
#include "bartiler/error.hpp"

#include <functional>
#include <numeric>

namespace bartiler {

int sigma(int n, int i) {
  if (n < 1 || i < 1 || i > n) {
    throw Error(Errc::OutOfRange, "sigma_" + std::to_string(n) + "(" + std::to_string(i) + ")");
  }
  return i % 2 == 0 ? i / 2 : n + (1 - i) / 2;
}

std::vector<Composition> enumerate_oc(int n) {
  std::vector<Composition> out;
  Composition current;
  std::function<void(int)> walk = [&](int remaining) {
    out.push_back(current);
    for (int part = 1; part <= remaining; part += 2) {
      current.push_back(part);
      walk(remaining - part);
      current.pop_back();
    }
  };
  walk(n);
  return out;
}

namespace {

void check_oc(int n, const Composition& alpha) {
  long total = 0;
  for (int part : alpha) {
    if (part <= 0 || part % 2 == 0) {
      throw Error(Errc::NotOddComposition, "part " + std::to_string(part));
    }
    total += part;
  }
  if (total > n) {
    throw Error(Errc::SumExceedsN, std::to_string(total) + " > " + std::to_string(n));
  }
}

}  // namespace

long s_stat(int n, const Composition& alpha) {
  check_oc(n, alpha);
  long total = 0;
  int partial = 0;
  for (int part : alpha) {
    partial += part;
    total += sigma(n, partial);
  }
  return total;
}

int rem_stat(int n, const Composition& alpha) {
  return static_cast<int>((2 * s_stat(n, alpha)) % (n + 1));
}

Composition canonical_form(int n, const Composition& alpha) {
  check_oc(n, alpha);
  if (alpha.empty()) return {};
  const auto len = static_cast<int>(alpha.size());
  const int half = len / 2;
  int last = 0;
  if (len % 2 == 1) {
    // (1^{2l}, alpha_1 + alpha_3 + ... + alpha_{2l+1} - l)
    for (int i = 0; i < len; i += 2) last += alpha[i];
    last -= half;
  } else {
    // (1^{2l-1}, alpha_2 + alpha_4 + ... + alpha_{2l} - l + 1)
    for (int i = 1; i < len; i += 2) last += alpha[i];
    last -= half - 1;
  }
  Composition out(len - 1, 1);
  out.push_back(last);
  return out;
}

BigInt c_closed(long s, int n) {
  const long max_s = static_cast<long>(n) * (n + 1) / 2;
  if (n < 1 || s < 0 || s > max_s) {
    throw Error(Errc::OutOfRange, "c_" + std::to_string(s) + "(" + std::to_string(n) + ")");
  }
  if (s == 0) return 1;
  const long half = n / 2;
  const long len = (2 * s) / (n + 1);
  const long q1 = s / (n + 1);
  const long r1 = s % (n + 1);
  const long q0 = s / n;
  const long r0 = s % n;
  if (len % 2 == 1 && r1 > half) {
    BigInt v = binomial(n - r1, q1) * binomial(q1 + r1 - half - 1, q1);
    return q1 % 2 == 0 ? BigInt(-v) : v;
  }
  if (len % 2 == 0 && r0 <= half) {
    BigInt v = binomial(r0 - 1, q0 - 1) * binomial(half - r0 + q0, q0);
    return q0 % 2 == 0 ? v : BigInt(-v);
  }
  return 0;
}

XPoly f_poly(int n, FMode mode) {
  const long max_s = static_cast<long>(n) * (n + 1) / 2;
  std::vector<BiPoly> coeffs(max_s + 1);
  if (mode == FMode::Closed) {
    for (long s = 0; s <= max_s; ++s) {
      const auto a_exp = static_cast<std::uint32_t>((2 * s) % (n + 1));
      const auto b_exp = static_cast<std::uint32_t>((2 * s) / (n + 1));
      coeffs[s] = BiPoly::monomial(c_closed(s, n), a_exp, b_exp);
    }
  } else {
    for (const auto& alpha : enumerate_oc(n)) {
      const long s = s_stat(n, alpha);
      const auto len = alpha.size();
      const int sign = ((len + 1) / 2) % 2 == 0 ? 1 : -1;
      coeffs[s] += BiPoly::monomial(sign, static_cast<std::uint32_t>(rem_stat(n, alpha)),
                                    static_cast<std::uint32_t>(len));
    }
  }
  return XPoly(std::move(coeffs));
}

BigInt oc_count_by_parts(long n, long k) {
  if (n < 0 || k < 0) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  if ((n + k) % 2 != 0) return 0;
  return binomial((n + k) / 2 - 1, k - 1);
}

BigInt oc_leq_count(long n, long k) {
  if (n < 0 || k < 0) return 0;
  return binomial((n + k) / 2, k);
}

std::set<int> palpha(int n, const Composition& alpha) {
  check_oc(n, alpha);
  std::set<int> out;
  int partial = 0;
  for (int part : alpha) {
    partial += part;
    out.insert(sigma(n, partial));
  }
  return out;
}

bool is_palpha_set(const std::set<int>& s, int n) {
  if (s.empty()) return false;
  if (*s.begin() < 1 || *s.rbegin() > n) return false;
  // x_1 > x_2 > ... > x_l, with x_{l+1} = 0
  std::vector<int> x(s.rbegin(), s.rend());
  const auto len = x.size();
  x.push_back(0);
  for (std::size_t i = 0; i < len; ++i) {
    const int mirror = x[len - 1 - i];
    if (x[i] + mirror < n + 1) return false;
    if (x[i + 1] + mirror >= n + 1) return false;
  }
  return true;
}

std::vector<Composition> tcomp_enumerate(int n, int k) {
  if (n < 0 || k < 2) {
    throw Error(Errc::PreconditionViolated, "TComp needs n >= 0 and k >= 2");
  }
  std::vector<Composition> out;
  Composition current;
  std::function<void(int)> walk = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = 1; part <= std::min(k - 1, remaining); ++part) {
      if (!current.empty() && current.back() + part < k) continue;
      current.push_back(part);
      walk(remaining - part);
      current.pop_back();
    }
  };
  walk(n);
  return out;
}

}  // namespace bartiler
