#pragma once

// Brute-force ground truth for k-bar tilings of an m x n rectangle.
//
// Rows are numbered 0..m-1 from the top and columns 0..n-1 from the left.
// Fault lines use the geometric convention instead: a vertical fault at x = c
// lies between columns c-1 and c, a horizontal fault at y = r lies r unit
// rows above the bottom edge.

#include "bartiler/bigint.hpp"
#include "bartiler/poly.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace bartiler {

enum class Dir { H, V };

/// A placed bar, anchored at its top-left cell.
struct Bar {
  Dir dir;
  int row;
  int col;

  bool operator==(const Bar&) const = default;
};

struct Tiling {
  int m = 0;
  int n = 0;
  int k = 0;
  std::vector<Bar> bars;
};

struct OracleLimits {
  /// Maximum number of distinct profiles held in one DP layer.
  std::size_t max_states = default_max_states();
  /// Maximum number of tilings produced by enumerate_tilings.
  std::size_t max_tilings = 10'000'000;
  unsigned threads = 1;

  /// 2^22, or BARTILER_CAPACITY from the environment when set.
  static std::size_t default_max_states();
};

/// t(m,n;k) = sum over tilings of a^{#vertical} b^{#horizontal}. For k = 1
/// every unit tile is counted as vertical.
BiPoly count_tilings(int m, int n, int k, const OracleLimits& limits = {});

bool klarner_tileable(int m, int n, int k);

/// Calls `visit` for each tiling and returns how many were produced.
/// Shares no code with count_tilings.
std::size_t enumerate_tilings(int m, int n, int k, const std::function<void(const Tiling&)>& visit,
                              const OracleLimits& limits = {});

BiPoly weight(const Tiling& t);

struct Faults {
  std::vector<int> vertical;    // x positions, ascending
  std::vector<int> horizontal;  // y positions, ascending

  bool has_vertical() const { return !vertical.empty(); }
  bool has_horizontal_at(int y) const;
};

Faults fault_predicates(const Tiling& t);

/// h: central horizontal fault; v: central fault and vertically fault-free;
/// u: vertically fault-free without central fault; w: vertically fault-free.
enum class SeriesKind { H, V, U, W };

/// Coefficient of x^n of the chosen series, from a census of 2k x n tilings.
BiPoly empirical_series(SeriesKind kind, int k, int n, const OracleLimits& limits = {});

/// Whether an m x n rectangle has a fault-free tiling by k1 x k2 rectangles.
bool graham_fault_free_exists(int m, int n, int k1, int k2);

/// Tilings of an m x (k ell) rectangle by k-bars for k <= m < 2k.
BigInt ar_narrow_count(int m, int ell, int k);

}  // namespace bartiler
