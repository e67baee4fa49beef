#include "bartiler/symfunc.hpp"
#include "bartiler/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace bartiler {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(Errc::MalformedPartition, "parts must be positive and weakly decreasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::operator[](int i) const {
  return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(parts_.front()), 0);
  for (int part : parts_) {
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

int Partition::rank() const {
  int d = 0;
  while (d < length() && parts_[static_cast<std::size_t>(d)] >= d + 1) ++d;
  return d;
}

bool Partition::contains(int row, int col) const { return col >= 1 && (*this)[row] >= col; }

Frobenius frobenius(const Partition& p) {
  const Partition conj = p.conjugate();
  Frobenius f;
  for (int i = 1; i <= p.rank(); ++i) {
    f.arms.push_back(p[i] - i);
    f.legs.push_back(conj[i] - i);
  }
  return f;
}

Partition from_frobenius(const Frobenius& f) {
  auto strictly_decreasing = [](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0 || (i > 0 && v[i] >= v[i - 1])) return false;
    }
    return true;
  };
  if (f.arms.size() != f.legs.size() || !strictly_decreasing(f.arms) ||
      !strictly_decreasing(f.legs)) {
    throw Error(Errc::MalformedPartition, "invalid Frobenius coordinates");
  }
  const int d = static_cast<int>(f.arms.size());
  std::vector<int> rows;
  for (int i = 1; i <= d; ++i) rows.push_back(f.arms[static_cast<std::size_t>(i - 1)] + i);
  // Below the Durfee square, row i meets column j <= d iff leg_j + j >= i.
  for (int i = d + 1;; ++i) {
    int len = 0;
    for (int j = 1; j <= d; ++j) {
      if (f.legs[static_cast<std::size_t>(j - 1)] + j >= i) ++len;
    }
    if (len == 0) break;
    rows.push_back(len);
  }
  return Partition(std::move(rows));
}

bool is_asc(const Partition& p) {
  const Frobenius f = frobenius(p);
  for (std::size_t i = 0; i < f.arms.size(); ++i) {
    if (f.arms[i] != f.legs[i] + 1) return false;
  }
  return true;
}

bool is_threshold(const Partition& p) { return is_asc(p.conjugate()); }

namespace {

std::vector<Partition> partitions_bounded(int n, bool distinct) {
  if (n < 0) throw Error(Errc::OutOfRange, "negative partition size");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> walk = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      walk(remaining - part, distinct ? part - 1 : part);
      current.pop_back();
    }
  };
  walk(n, n);
  return out;
}

}  // namespace

std::vector<Partition> partitions_of(int n) { return partitions_bounded(n, false); }

std::vector<Partition> distinct_partitions_of(int n) { return partitions_bounded(n, true); }

std::vector<Partition> enumerate_asc(int total) {
  if (total < 0 || total % 2 != 0) {
    throw Error(Errc::OddTarget, "ASC partitions need an even size, got " + std::to_string(total));
  }
  std::vector<Partition> out;
  for (const auto& dist : distinct_partitions_of(total / 2)) {
    Frobenius f;
    f.arms = dist.parts();
    for (int part : f.arms) f.legs.push_back(part - 1);
    out.push_back(from_frobenius(f));
  }
  return out;
}

bool is_ribbon(const std::vector<Cell>& cells) {
  if (cells.empty()) return false;
  const std::set<Cell> set(cells.begin(), cells.end());
  for (const auto& [r, c] : set) {
    if (set.count({r + 1, c}) && set.count({r, c + 1}) && set.count({r + 1, c + 1})) return false;
  }
  std::set<Cell> seen{*set.begin()};
  std::vector<Cell> stack{*set.begin()};
  while (!stack.empty()) {
    const auto [r, c] = stack.back();
    stack.pop_back();
    for (const Cell& next : {Cell{r + 1, c}, Cell{r - 1, c}, Cell{r, c + 1}, Cell{r, c - 1}}) {
      if (set.count(next) && seen.insert(next).second) stack.push_back(next);
    }
  }
  return seen.size() == set.size();
}

int ribbon_sign(const Partition& outer, const Partition& inner) {
  std::vector<Cell> cells;
  std::set<int> rows;
  for (int i = 1; i <= outer.length(); ++i) {
    if (inner[i] > outer[i]) throw Error(Errc::MalformedPartition, "inner not contained in outer");
    for (int j = inner[i] + 1; j <= outer[i]; ++j) {
      cells.emplace_back(i, j);
      rows.insert(i);
    }
  }
  if (inner.length() > outer.length() || !is_ribbon(cells)) {
    throw Error(Errc::MalformedPartition, "skew shape is not a ribbon");
  }
  return rows.size() % 2 == 1 ? 1 : -1;
}

namespace {

// Removes the rim segment of `len` cells that starts at the bottom cell of
// the first column. Returns false if that segment is not a rim hook.
bool peel(const std::vector<int>& rows, int len, std::vector<int>& rest, Ribbon& ribbon) {
  const int height = static_cast<int>(rows.size());
  ribbon.cells.clear();
  std::vector<int> removed(rows.size(), 0);
  for (int t = 0; t < len; ++t) {
    const int content = 1 - height + t;
    int row = 0;
    for (int i = height; i >= std::max(1, 1 - content); --i) {
      if (rows[static_cast<std::size_t>(i - 1)] >= i + content) {
        row = i;
        break;
      }
    }
    if (row == 0) return false;
    ribbon.cells.emplace_back(row, row + content);
    ++removed[static_cast<std::size_t>(row - 1)];
  }
  rest.assign(rows.begin(), rows.end());
  std::set<int> touched;
  for (const auto& [r, c] : ribbon.cells) {
    const auto idx = static_cast<std::size_t>(r - 1);
    if (c <= rows[idx] - removed[idx]) return false;  // not a suffix of its row
    touched.insert(r);
  }
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= removed[i];
  for (std::size_t i = 1; i < rest.size(); ++i) {
    if (rest[i] > rest[i - 1]) return false;
  }
  while (!rest.empty() && rest.back() == 0) rest.pop_back();
  ribbon.rows = static_cast<int>(touched.size());
  return true;
}

void srht_walk(const std::vector<int>& rows, std::vector<Ribbon>& chain,
               const std::function<bool(int)>& allowed, const std::function<void(int)>& take,
               const std::function<void(int)>& give_back,
               const std::function<void(const std::vector<Ribbon>&)>& emit) {
  if (rows.empty()) {
    emit(chain);
    return;
  }
  const int height = static_cast<int>(rows.size());
  const int longest = rows.front() + height - 1;
  std::vector<int> rest;
  Ribbon ribbon;
  for (int len = 1; len <= longest; ++len) {
    if (!allowed(len) || !peel(rows, len, rest, ribbon)) continue;
    take(len);
    chain.push_back(ribbon);
    srht_walk(rest, chain, allowed, take, give_back, emit);
    chain.pop_back();
    give_back(len);
  }
}

int chain_sign(const std::vector<Ribbon>& chain) {
  int sign = 1;
  for (const auto& r : chain) sign *= r.sign();
  return sign;
}

}  // namespace

std::vector<RimHookDecomposition> srht_enumerate(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw Error(Errc::SizeMismatch, "|lambda| != |mu|");
  }
  std::map<int, int> budget;
  for (int part : mu.parts()) ++budget[part];
  std::vector<RimHookDecomposition> out;
  std::vector<Ribbon> chain;
  srht_walk(
      lambda.parts(), chain, [&](int len) { return budget[len] > 0; },
      [&](int len) { --budget[len]; }, [&](int len) { ++budget[len]; },
      [&](const std::vector<Ribbon>& done) { out.push_back({done, chain_sign(done)}); });
  return out;
}

std::map<Partition, BigInt> srht_signed_by_type(const Partition& lambda) {
  std::map<Partition, BigInt> out;
  std::vector<Ribbon> chain;
  srht_walk(
      lambda.parts(), chain, [](int) { return true; }, [](int) {}, [](int) {},
      [&](const std::vector<Ribbon>& done) {
        std::vector<int> sizes;
        for (const auto& r : done) sizes.push_back(r.size());
        std::sort(sizes.rbegin(), sizes.rend());
        out[Partition(std::move(sizes))] += chain_sign(done);
      });
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

BigInt inverse_kostka(const Partition& mu, const Partition& lambda) {
  BigInt total = 0;
  for (const auto& s : srht_enumerate(lambda, mu)) total += s.sign;
  return total;
}

bool frob_condition(const Partition& lambda, int k) {
  if (!is_asc(lambda)) throw Error(Errc::NotASC, "frob_condition needs an ASC partition");
  const Frobenius fr = frobenius(lambda);
  const int d = static_cast<int>(fr.arms.size());
  auto f = [&](int j) { return j <= d ? fr.arms[static_cast<std::size_t>(j - 1)] : 0; };
  for (int j = 1; j <= d; ++j) {
    if (f(j) + f(d + 1 - j) < k) return false;
    if (f(j + 1) + f(d + 1 - j) >= k) return false;
  }
  return true;
}

Partition hook_type(int k, int q, int r) {
  if (k < 1 || q < 0 || r < 0) throw Error(Errc::OutOfRange, "hook_type arguments");
  std::vector<int> parts(static_cast<std::size_t>(q), k);
  parts.insert(parts.end(), static_cast<std::size_t>(r), 1);
  return Partition(std::move(parts));
}

namespace {

void check_sk(int s, int k) {
  if (s < 0 || k < 2) throw Error(Errc::PreconditionViolated, "need s >= 0 and k >= 2");
}

}  // namespace

std::vector<Partition> asc_1k(int s, int k) {
  check_sk(s, k);
  std::vector<Partition> out;
  for (const auto& lambda : enumerate_asc(2 * s)) {
    const int d = lambda.rank();
    const int rest = 2 * s - k * d;
    if (rest < 0) continue;
    if (!srht_enumerate(lambda, hook_type(k, d, rest)).empty()) out.push_back(lambda);
  }
  return out;
}

std::map<Partition, BigInt> plethysm_e_coeffs(int s, int k) {
  check_sk(s, k);
  std::map<Partition, BigInt> out;
  for (const auto& lambda : enumerate_asc(2 * s)) {
    const int d = lambda.rank();
    const int rest = 2 * s - k * d;
    if (rest < 0) continue;
    const Partition mu = hook_type(k, d, rest);
    for (const auto& t : srht_enumerate(lambda, mu)) out[mu] += t.sign;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<Partition, BigInt> plethysm_e_expansion(int s) {
  if (s < 0) throw Error(Errc::PreconditionViolated, "need s >= 0");
  std::map<Partition, BigInt> out;
  for (const auto& lambda : enumerate_asc(2 * s)) {
    for (const auto& [mu, c] : srht_signed_by_type(lambda)) out[mu] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

XPoly denominator_from_srht(int k) {
  check_sk(0, k);
  const int top = k * (k - 1) / 2;
  std::vector<BiPoly> coeffs;
  for (int s = 0; s <= top; ++s) {
    BiPoly c;
    for (const auto& [mu, a_mu] : plethysm_e_coeffs(s, k)) {
      int q = 0;
      int r = 0;
      for (int part : mu.parts()) (part == 1 ? r : q) += 1;
      // e_1 = a, e_k = (-1)^(k+1) b
      const bool negative = (s % 2 == 1) != (k % 2 == 0 && q % 2 == 1);
      const BigInt sign = negative ? -1 : 1;
      c += BiPoly::monomial(sign * a_mu, static_cast<std::uint32_t>(r),
                            static_cast<std::uint32_t>(q));
    }
    coeffs.push_back(std::move(c));
  }
  return XPoly(std::move(coeffs));
}

}  // namespace bartiler
