#include "bartiler/tiling.hpp"
#include "bartiler/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>

namespace bartiler {

std::size_t OracleLimits::default_max_states() {
  if (const char* env = std::getenv("BARTILER_CAPACITY")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 22;
}

namespace {

void check_dims(int m, int n, int k) {
  if (m < 0 || n < 0 || k < 1) {
    throw Error(Errc::PreconditionViolated, "need m, n >= 0 and k >= 1");
  }
}

// ---------------------------------------------------------------------------
// Column-sweep transfer matrix. A profile stores, per row, how many further
// columns the horizontal bar through that row still covers.

class ProfileCodec {
 public:
  ProfileCodec(int m, int k) : m_(m), bits_(std::max(1, static_cast<int>(std::bit_width(
                                                           static_cast<unsigned>(k - 1))))) {
    if (static_cast<long>(m) * bits_ > 64) {
      throw Error(Errc::CapacityExceeded,
                  "profile of " + std::to_string(m) + " rows does not fit in 64 bits");
    }
  }

  std::uint64_t pack(const std::vector<int>& prof) const {
    std::uint64_t key = 0;
    for (int r = m_ - 1; r >= 0; --r) key = (key << bits_) | static_cast<std::uint64_t>(prof[r]);
    return key;
  }

  std::vector<int> unpack(std::uint64_t key) const {
    std::vector<int> prof(m_);
    const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
    for (int r = 0; r < m_; ++r) {
      prof[r] = static_cast<int>(key & mask);
      key >>= bits_;
    }
    return prof;
  }

 private:
  int m_;
  int bits_;
};

struct Transition {
  std::uint64_t out;
  std::uint32_t vertical;
  std::uint32_t horizontal;
};

class ColumnStepper {
 public:
  ColumnStepper(int m, int k, const ProfileCodec& codec) : m_(m), k_(k), codec_(codec) {}

  const std::vector<Transition>& transitions(std::uint64_t in_key) {
    auto it = cache_.find(in_key);
    if (it != cache_.end()) return it->second;
    in_ = codec_.unpack(in_key);
    out_.assign(m_, 0);
    found_.clear();
    fill(0, 0, 0);
    return cache_.emplace(in_key, std::move(found_)).first->second;
  }

 private:
  // Cells top to bottom; a free cell takes a vertical bar (k free rows in
  // this column) or starts a horizontal bar.
  void fill(int row, std::uint32_t v, std::uint32_t h) {
    if (row == m_) {
      found_.push_back({codec_.pack(out_), v, h});
      return;
    }
    if (in_[row] > 0) {
      out_[row] = in_[row] - 1;
      fill(row + 1, v, h);
      return;
    }
    if (row + k_ <= m_ &&
        std::all_of(in_.begin() + row, in_.begin() + row + k_, [](int p) { return p == 0; })) {
      for (int r = row; r < row + k_; ++r) out_[r] = 0;
      fill(row + k_, v + 1, h);
    }
    if (k_ > 1) {
      out_[row] = k_ - 1;
      fill(row + 1, v, h + 1);
    }
  }

  int m_;
  int k_;
  const ProfileCodec& codec_;
  std::vector<int> in_;
  std::vector<int> out_;
  std::vector<Transition> found_;
  std::unordered_map<std::uint64_t, std::vector<Transition>> cache_;
};

using Layer = std::map<std::uint64_t, BiPoly>;

Layer advance(const std::vector<std::pair<std::uint64_t, BiPoly>>& states, std::size_t begin,
              std::size_t end, ColumnStepper& stepper) {
  Layer next;
  for (std::size_t i = begin; i < end; ++i) {
    const auto& [key, weight] = states[i];
    for (const auto& t : stepper.transitions(key)) {
      next[t.out] += weight.times_monomial(t.vertical, t.horizontal);
    }
  }
  return next;
}

}  // namespace

BiPoly count_tilings(int m, int n, int k, const OracleLimits& limits) {
  check_dims(m, n, k);
  if (m == 0 || n == 0) return BiPoly(1);
  const ProfileCodec codec(m, k);
  const unsigned threads = std::max(1U, limits.threads);
  std::vector<ColumnStepper> steppers(threads, ColumnStepper(m, k, codec));

  Layer layer;
  layer[0] = BiPoly(1);
  for (int col = 0; col < n; ++col) {
    std::vector<std::pair<std::uint64_t, BiPoly>> states(layer.begin(), layer.end());
    Layer next;
    if (threads == 1 || states.size() < 2 * threads) {
      next = advance(states, 0, states.size(), steppers[0]);
    } else {
      // Chunked by key order and merged in chunk order: the result does not
      // depend on scheduling.
      std::vector<Layer> partial(threads);
      std::vector<std::thread> pool;
      const std::size_t chunk = (states.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t b = std::min(states.size(), t * chunk);
        const std::size_t e = std::min(states.size(), b + chunk);
        pool.emplace_back([&, t, b, e] { partial[t] = advance(states, b, e, steppers[t]); });
      }
      for (auto& th : pool) th.join();
      for (auto& part : partial) {
        for (auto& [key, w] : part) next[key] += w;
      }
    }
    if (next.size() > limits.max_states) {
      throw Error(Errc::CapacityExceeded, std::to_string(next.size()) + " profiles exceed cap " +
                                              std::to_string(limits.max_states));
    }
    layer = std::move(next);
  }
  auto it = layer.find(0);
  return it == layer.end() ? BiPoly() : it->second;
}

bool klarner_tileable(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 1) {
    throw Error(Errc::PreconditionViolated, "klarner_tileable needs positive inputs");
  }
  return m % k == 0 || n % k == 0;
}

// ---------------------------------------------------------------------------
// Explicit enumeration: fill the first empty cell in row-major order.

namespace {

class Enumerator {
 public:
  Enumerator(int m, int n, int k, const std::function<void(const Tiling&)>& visit,
             std::size_t cap)
      : grid_(static_cast<std::size_t>(m) * n, false), visit_(visit), cap_(cap) {
    tiling_.m = m;
    tiling_.n = n;
    tiling_.k = k;
  }

  std::size_t run() {
    search(0);
    return produced_;
  }

 private:
  bool filled(int r, int c) const { return grid_[static_cast<std::size_t>(r) * tiling_.n + c]; }
  void set(int r, int c, bool v) { grid_[static_cast<std::size_t>(r) * tiling_.n + c] = v; }

  void search(std::size_t from) {
    const int m = tiling_.m;
    const int n = tiling_.n;
    const int k = tiling_.k;
    std::size_t cell = from;
    while (cell < grid_.size() && grid_[cell]) ++cell;
    if (cell == grid_.size()) {
      if (++produced_ > cap_) {
        throw Error(Errc::CapacityExceeded,
                    "more than " + std::to_string(cap_) + " tilings");
      }
      visit_(tiling_);
      return;
    }
    const int r = static_cast<int>(cell / n);
    const int c = static_cast<int>(cell % n);
    // Horizontal first; for k = 1 a unit tile counts as vertical only.
    if (k > 1 && c + k <= n) {
      bool ok = true;
      for (int j = c; j < c + k && ok; ++j) ok = !filled(r, j);
      if (ok) {
        for (int j = c; j < c + k; ++j) set(r, j, true);
        tiling_.bars.push_back({Dir::H, r, c});
        search(cell + k);
        tiling_.bars.pop_back();
        for (int j = c; j < c + k; ++j) set(r, j, false);
      }
    }
    if (r + k <= m) {
      bool ok = true;
      for (int i = r; i < r + k && ok; ++i) ok = !filled(i, c);
      if (ok) {
        for (int i = r; i < r + k; ++i) set(i, c, true);
        tiling_.bars.push_back({Dir::V, r, c});
        search(cell + 1);
        tiling_.bars.pop_back();
        for (int i = r; i < r + k; ++i) set(i, c, false);
      }
    }
  }

  std::vector<bool> grid_;
  Tiling tiling_;
  const std::function<void(const Tiling&)>& visit_;
  std::size_t cap_;
  std::size_t produced_ = 0;
};

}  // namespace

std::size_t enumerate_tilings(int m, int n, int k, const std::function<void(const Tiling&)>& visit,
                              const OracleLimits& limits) {
  check_dims(m, n, k);
  return Enumerator(m, n, k, visit, limits.max_tilings).run();
}

BiPoly weight(const Tiling& t) {
  std::uint32_t v = 0;
  std::uint32_t h = 0;
  for (const auto& bar : t.bars) (bar.dir == Dir::V ? v : h) += 1;
  return BiPoly::monomial(1, v, h);
}

bool Faults::has_horizontal_at(int y) const {
  return std::binary_search(horizontal.begin(), horizontal.end(), y);
}

Faults fault_predicates(const Tiling& t) {
  std::vector<bool> x_crossed(static_cast<std::size_t>(std::max(t.n, 1)) + 1, false);
  std::vector<bool> y_crossed(static_cast<std::size_t>(std::max(t.m, 1)) + 1, false);
  for (const auto& bar : t.bars) {
    if (bar.dir == Dir::H) {
      for (int x = bar.col + 1; x < bar.col + t.k; ++x) x_crossed[x] = true;
    } else {
      // Spans y in [m - row - k, m - row].
      const int low = t.m - bar.row - t.k;
      for (int y = low + 1; y < low + t.k; ++y) y_crossed[y] = true;
    }
  }
  Faults f;
  for (int x = 1; x < t.n; ++x) {
    if (!x_crossed[x]) f.vertical.push_back(x);
  }
  for (int y = 1; y < t.m; ++y) {
    if (!y_crossed[y]) f.horizontal.push_back(y);
  }
  return f;
}

BiPoly empirical_series(SeriesKind kind, int k, int n, const OracleLimits& limits) {
  if (k < 1 || n < 0) throw Error(Errc::PreconditionViolated, "need k >= 1, n >= 0");
  if (n == 0) return kind == SeriesKind::H ? BiPoly(1) : BiPoly();
  std::vector<BiPoly::Term> terms;
  enumerate_tilings(
      2 * k, n, k,
      [&](const Tiling& t) {
        const Faults f = fault_predicates(t);
        const bool central = f.has_horizontal_at(k);
        const bool vff = !f.has_vertical();
        bool keep = false;
        switch (kind) {
          case SeriesKind::H: keep = central; break;
          case SeriesKind::V: keep = central && vff; break;
          case SeriesKind::U: keep = vff && !central; break;
          case SeriesKind::W: keep = vff; break;
        }
        if (keep) terms.push_back(weight(t).terms().front());
      },
      limits);
  return BiPoly::from_terms(std::move(terms));
}

bool graham_fault_free_exists(int m, int n, int k1, int k2) {
  if (m < 1 || n < 1 || k1 < 1 || k2 < 1 || std::gcd(k1, k2) != 1 ||
      static_cast<long>(m) * n <= static_cast<long>(k1) * k2) {
    throw Error(Errc::PreconditionViolated, "need gcd(k1,k2) = 1 and mn > k1 k2");
  }
  auto divides_side = [&](int d) { return m % d == 0 || n % d == 0; };
  auto two_representations = [&](int side) {
    int ways = 0;
    for (int u = 1; u * k1 < side; ++u) {
      const int rest = side - u * k1;
      if (rest % k2 == 0) ++ways;
    }
    return ways >= 2;
  };
  if (!divides_side(k1) || !divides_side(k2)) return false;
  if (!two_representations(m) || !two_representations(n)) return false;
  const bool domino = (k1 == 1 && k2 == 2) || (k1 == 2 && k2 == 1);
  if (domino && m == 6 && n == 6) return false;
  return true;
}

BigInt ar_narrow_count(int m, int ell, int k) {
  if (k < 1 || m < k || m >= 2 * k || ell < 0) {
    throw Error(Errc::RangeViolation, "need k <= m < 2k and ell >= 0");
  }
  BigInt total = 0;
  const BigInt base = m - k + 1;
  for (int j = 0; j <= ell; ++j) {
    total += power(base, j) * binomial(static_cast<long>(k) * j + ell - j, ell - j);
  }
  return total;
}

}  // namespace bartiler
