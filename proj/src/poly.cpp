#include "bartiler/poly.hpp"
#include "bartiler/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace bartiler {

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(long constant) : BiPoly(BigInt(constant)) {}

BiPoly::BiPoly(const BigInt& constant) {
  if (constant != 0) terms_.push_back({{0, 0}, constant});
}

BiPoly BiPoly::monomial(const BigInt& coeff, std::uint32_t deg_a, std::uint32_t deg_b) {
  BiPoly out;
  if (coeff != 0) out.terms_.push_back({{deg_a, deg_b}, coeff});
  return out;
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& l, const Term& r) { return l.exp < r.exp; });
  BiPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
  return out;
}

bool BiPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == Monomial{0, 0} && terms_[0].coeff == 1;
}

BigInt BiPoly::coeff(std::uint32_t deg_a, std::uint32_t deg_b) const {
  const Monomial key{deg_a, deg_b};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const Monomial& m) { return t.exp < m; });
  if (it != terms_.end() && it->exp == key) return it->coeff;
  return 0;
}

long BiPoly::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  const long d = static_cast<long>(terms_[0].exp.a) + terms_[0].exp.b;
  for (const auto& t : terms_) {
    if (static_cast<long>(t.exp.a) + t.exp.b != d) return -2;
  }
  return d;
}

BigInt BiPoly::evaluate(const BigInt& a_val, const BigInt& b_val) const {
  BigInt total = 0;
  for (const auto& t : terms_) {
    total += t.coeff * power(a_val, t.exp.a) * power(b_val, t.exp.b);
  }
  return total;
}

BiPoly BiPoly::times_monomial(std::uint32_t deg_a, std::uint32_t deg_b) const {
  BiPoly out = *this;
  for (auto& t : out.terms_) {
    t.exp.a += deg_a;
    t.exp.b += deg_b;
  }
  return out;
}

BiPoly BiPoly::pow(unsigned exp) const {
  BiPoly result(1);
  BiPoly base = *this;
  while (exp > 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp > 0) base *= base;
  }
  return result;
}

namespace {

// Merge of two sorted term lists; `sign` is applied to rhs.
std::vector<BiPoly::Term> merge_terms(const std::vector<BiPoly::Term>& lhs,
                                      const std::vector<BiPoly::Term>& rhs, int sign) {
  std::vector<BiPoly::Term> out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i].exp < rhs[j].exp)) {
      out.push_back(lhs[i++]);
    } else if (i == lhs.size() || rhs[j].exp < lhs[i].exp) {
      out.push_back({rhs[j].exp, sign > 0 ? BigInt(rhs[j].coeff) : BigInt(-rhs[j].coeff)});
      ++j;
    } else {
      BigInt c = sign > 0 ? BigInt(lhs[i].coeff + rhs[j].coeff)
                          : BigInt(lhs[i].coeff - rhs[j].coeff);
      if (c != 0) out.push_back({lhs[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, +1);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, -1);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

BiPoly& BiPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  // Single-term factors preserve the ordering of the other operand.
  if (lhs.size() == 1 || rhs.size() == 1) {
    const BiPoly& mono = lhs.size() == 1 ? lhs : rhs;
    const BiPoly& other = lhs.size() == 1 ? rhs : lhs;
    const auto& m = mono.terms_[0];
    BiPoly out;
    out.terms_.reserve(other.size());
    for (const auto& t : other.terms_) {
      out.terms_.push_back({{t.exp.a + m.exp.a, t.exp.b + m.exp.b}, t.coeff * m.coeff});
    }
    return out;
  }
  std::vector<BiPoly::Term> prod;
  prod.reserve(lhs.size() * rhs.size());
  for (const auto& s : lhs.terms_) {
    for (const auto& t : rhs.terms_) {
      prod.push_back({{s.exp.a + t.exp.a, s.exp.b + t.exp.b}, s.coeff * t.coeff});
    }
  }
  return BiPoly::from_terms(std::move(prod));
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

BiPoly bipoly_arith(const BiPoly& p, const BiPoly& q, char op) {
  switch (op) {
    case '+': return p + q;
    case '-': return p - q;
    case '*': return p * q;
    default: throw Error(Errc::PreconditionViolated, std::string("unknown operator ") + op);
  }
}

// ---------------------------------------------------------------------------
// XPoly

namespace {
const BiPoly kZero;
}

XPoly::XPoly(std::vector<BiPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly::XPoly(const BiPoly& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

XPoly XPoly::term(std::size_t n, const BiPoly& c) {
  if (c.is_zero()) return {};
  std::vector<BiPoly> coeffs(n + 1);
  coeffs[n] = c;
  return XPoly(std::move(coeffs));
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BiPoly& XPoly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

XPoly XPoly::shifted(std::size_t n) const {
  if (is_zero()) return {};
  std::vector<BiPoly> out(n);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return XPoly(std::move(out));
}

XPoly XPoly::pow(unsigned exp) const {
  XPoly result(BiPoly(1));
  XPoly base = *this;
  while (exp > 0) {
    if (exp & 1U) result = result * base;
    exp >>= 1U;
    if (exp > 0) base = base * base;
  }
  return result;
}

XPoly XPoly::negate_x() const {
  XPoly out = *this;
  for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
  return out;
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator*=(const BiPoly& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

XPoly operator*(const XPoly& lhs, const XPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BiPoly> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return XPoly(std::move(out));
}

XPoly XPoly::operator-() const {
  XPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

// ---------------------------------------------------------------------------
// XSeries

XSeries::XSeries(std::size_t order) : coeffs_(order + 1) {}

XSeries::XSeries(std::size_t order, const XPoly& poly) : coeffs_(order + 1) {
  for (std::size_t i = 0; i <= order; ++i) coeffs_[i] = poly[i];
}

namespace {
void require_same_order(const XSeries& lhs, const XSeries& rhs) {
  if (lhs.order() != rhs.order()) {
    throw Error(Errc::TruncationMismatch, "series orders " + std::to_string(lhs.order()) +
                                              " and " + std::to_string(rhs.order()));
  }
}
}  // namespace

XSeries& XSeries::operator+=(const XSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

XSeries& XSeries::operator-=(const XSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

XSeries operator*(const XSeries& lhs, const XSeries& rhs) {
  require_same_order(lhs, rhs);
  XSeries out(lhs.order());
  for (std::size_t i = 0; i <= lhs.order(); ++i) {
    if (lhs[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= lhs.order(); ++j) {
      if (rhs[j].is_zero()) continue;
      out[i + j] += lhs[i] * rhs[j];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// RationalGF

namespace {
void require_unit_constant(const XPoly& den) {
  if (!den[0].is_one()) {
    throw Error(Errc::NonUnitConstantTerm, "constant term is " + to_string(den[0]));
  }
}
}  // namespace

RationalGF::RationalGF(XPoly num, XPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require_unit_constant(den_);
}

bool RationalGF::equivalent(const RationalGF& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

// ---------------------------------------------------------------------------
// Series operations

XSeries series_invert(const XPoly& p, std::size_t order) {
  require_unit_constant(p);
  XSeries s(order);
  s[0] = BiPoly(1);
  const auto deg = static_cast<std::size_t>(p.degree());
  for (std::size_t n = 1; n <= order; ++n) {
    BiPoly acc;
    for (std::size_t i = 1; i <= std::min(n, deg); ++i) {
      if (p[i].is_zero() || s[n - i].is_zero()) continue;
      acc -= p[i] * s[n - i];
    }
    s[n] = std::move(acc);
  }
  return s;
}

XSeries hadamard_product(const XSeries& lhs, const XSeries& rhs) {
  require_same_order(lhs, rhs);
  XSeries out(lhs.order());
  for (std::size_t i = 0; i <= lhs.order(); ++i) out[i] = lhs[i] * rhs[i];
  return out;
}

XSeries rational_to_series(const RationalGF& r, std::size_t order) {
  return XSeries(order, r.num()) * series_invert(r.den(), order);
}

std::vector<BigInt> evaluate(const XPoly& p, const BigInt& a_val, const BigInt& b_val) {
  std::vector<BigInt> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.evaluate(a_val, b_val));
  return out;
}

void coeff_stream(const RationalGF& r, std::size_t n_max, const BigInt& a_val,
                  const BigInt& b_val,
                  const std::function<void(std::size_t, const BigInt&)>& sink) {
  const std::vector<BigInt> num = evaluate(r.num(), a_val, b_val);
  const std::vector<BigInt> den = evaluate(r.den(), a_val, b_val);
  if (den.empty() || den[0] != 1) {
    throw Error(Errc::NonUnitConstantTerm, "denominator constant term after substitution");
  }
  // Sparse view of den_1..den_D.
  std::vector<std::pair<std::size_t, BigInt>> taps;
  for (std::size_t i = 1; i < den.size(); ++i) {
    if (den[i] != 0) taps.emplace_back(i, den[i]);
  }
  const std::size_t window = den.size();  // holds c_{n-D}..c_n
  std::vector<BigInt> ring(window);
  BigInt acc;
  for (std::size_t n = 0; n <= n_max; ++n) {
    acc = n < num.size() ? num[n] : BigInt(0);
    for (const auto& [i, d] : taps) {
      if (i > n) break;
      acc -= d * ring[(n - i) % window];
    }
    ring[n % window] = acc;
    sink(n, acc);
  }
}

BigInt coeff_at(const RationalGF& r, std::size_t n, const BigInt& a_val, const BigInt& b_val) {
  BigInt out;
  coeff_stream(r, n, a_val, b_val, [&](std::size_t i, const BigInt& c) {
    if (i == n) out = c;
  });
  return out;
}

XPoly sqrt_pair_product(const XPoly& p) {
  const XPoly full = p * p.negate_x();
  std::vector<BiPoly> even;
  for (std::size_t i = 0; i < full.coeffs().size(); ++i) {
    if (i % 2 == 1) {
      if (!full[i].is_zero()) {
        throw Error(Errc::OddTermSurvived, "x^" + std::to_string(i) + " in p(x)p(-x)");
      }
    } else {
      even.push_back(full[i]);
    }
  }
  return XPoly(std::move(even));
}

XPoly exact_quotient(const XPoly& num, const XPoly& den) {
  if (den.is_zero() || !den[0].is_one()) {
    throw Error(Errc::PreconditionViolated, "divisor must have constant term 1");
  }
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) {
    throw Error(Errc::PreconditionViolated, "divisor does not divide dividend");
  }
  const auto qdeg = static_cast<std::size_t>(num.degree() - den.degree());
  const XSeries q = XSeries(qdeg, num) * series_invert(den, qdeg);
  XPoly quotient(q.coeffs());
  if (quotient * den != num) {
    throw Error(Errc::PreconditionViolated, "divisor does not divide dividend");
  }
  return quotient;
}

// ---------------------------------------------------------------------------
// Substitution

Substitution Substitution::b_power(long k) {
  Substitution s;
  s.b = {1, 0, k};
  return s;
}

Substitution Substitution::negate_b() {
  Substitution s;
  s.b = {-1, 0, 1};
  return s;
}

namespace {

BiPoly substitute_scaled(const BiPoly& p, const Substitution& map, std::size_t x_power) {
  std::vector<BiPoly::Term> out;
  out.reserve(p.size());
  const BigInt x_coeff = power(map.x.coeff, x_power);
  const long xa = map.x.a_exp * static_cast<long>(x_power);
  const long xb = map.x.b_exp * static_cast<long>(x_power);
  for (const auto& t : p.terms()) {
    const long ea = static_cast<long>(t.exp.a) * map.a.a_exp +
                    static_cast<long>(t.exp.b) * map.b.a_exp + xa;
    const long eb = static_cast<long>(t.exp.a) * map.a.b_exp +
                    static_cast<long>(t.exp.b) * map.b.b_exp + xb;
    if (ea < 0 || eb < 0) {
      throw Error(Errc::NegativeExponent,
                  "a^" + std::to_string(ea) + " b^" + std::to_string(eb));
    }
    BigInt c = t.coeff * power(map.a.coeff, t.exp.a) * power(map.b.coeff, t.exp.b) * x_coeff;
    out.push_back({{static_cast<std::uint32_t>(ea), static_cast<std::uint32_t>(eb)}, std::move(c)});
  }
  return BiPoly::from_terms(std::move(out));
}

}  // namespace

BiPoly substitute(const BiPoly& p, const Substitution& map) { return substitute_scaled(p, map, 0); }

XPoly substitute(const XPoly& p, const Substitution& map) {
  std::vector<BiPoly> out;
  out.reserve(p.coeffs().size());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    out.push_back(substitute_scaled(p[i], map, i));
  }
  return XPoly(std::move(out));
}

XPoly bar_polynomial(std::size_t n, const BiPoly& c) {
  return XPoly(BiPoly(1)) - XPoly::term(1, BiPoly::a()) - XPoly::term(n, c);
}

// ---------------------------------------------------------------------------
// Printing. Monomials in descending a-degree, as usually written by hand.

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  auto var = [&](char v, std::uint32_t e) {
    if (e == 0) return;
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  var('a', m.a);
  var('b', m.b);
  return s;
}

// Terms of p with signs, highest a-degree first.
std::vector<std::pair<bool, std::string>> signed_terms(const BiPoly& p) {
  std::vector<std::pair<bool, std::string>> out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const bool negative = it->coeff < 0;
    const BigInt mag = abs(it->coeff);
    const std::string mono = monomial_text(it->exp);
    std::string body;
    if (mono.empty()) {
      body = to_decimal(mag);
    } else {
      body = (mag == 1 ? std::string() : to_decimal(mag)) + mono;
    }
    out.emplace_back(negative, body);
  }
  return out;
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      if (terms[i].first) s += "-";
    } else {
      s += terms[i].first ? " - " : " + ";
    }
    s += terms[i].second;
  }
  return s;
}

}  // namespace

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  return join_terms(signed_terms(p));
}

std::string to_string(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const BiPoly& c = p[i];
    if (c.is_zero()) continue;
    std::string xpart;
    if (i == 1) xpart = "x";
    if (i > 1) xpart = "x^" + std::to_string(i);
    auto terms = signed_terms(c);
    bool negative = false;
    std::string body;
    if (terms.size() == 1) {
      negative = terms[0].first;
      body = terms[0].second;
      if (!xpart.empty() && body == "1") body.clear();
    } else {
      // Factor out a shared minus sign: -(3a^2b^2 + 2b^4)x^2
      const bool all_negative =
          std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.first; });
      if (all_negative) {
        negative = true;
        for (auto& t : terms) t.first = false;
      }
      body = "(" + join_terms(terms) + ")";
    }
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    s += body + xpart;
    first = false;
  }
  return s;
}

}  // namespace bartiler
