#pragma once

// Partitions, ASC/threshold shapes, special rim-hook tableaux and the
// elementary expansion of e_s o e_2. This layer rederives the denominator
// f_{k-1}(x;a,-b) of the Hadamard square without touching the tiling code.

#include "bartiler/bigint.hpp"
#include "bartiler/poly.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

namespace bartiler {

/// Weakly decreasing positive parts. Cells are (row, col), 1-based.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// lambda_i, zero past the last part.
  int operator[](int i) const;

  Partition conjugate() const;
  /// Durfee size: the largest d with lambda_d >= d.
  int rank() const;
  bool contains(int row, int col) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

struct Frobenius {
  std::vector<int> arms;  // lambda_i - i
  std::vector<int> legs;  // lambda'_i - i

  bool operator==(const Frobenius&) const = default;
};

Frobenius frobenius(const Partition& p);
/// Inverse of frobenius(); throws MalformedPartition for invalid coordinates.
Partition from_frobenius(const Frobenius& f);

/// lambda_i = lambda'_i + 1 for i <= rank.
bool is_asc(const Partition& p);
/// lambda'_i = lambda_i + 1 for i <= rank.
bool is_threshold(const Partition& p);

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);
/// Partitions of n into distinct parts, decreasing lexicographic order.
std::vector<Partition> distinct_partitions_of(int n);

/// ASC partitions of `total`, built from distinct partitions of total/2 as
/// Frobenius coordinates (f_i | f_i - 1).
std::vector<Partition> enumerate_asc(int total);

using Cell = std::pair<int, int>;

/// Connected and free of 2x2 blocks. The empty set is not a ribbon here.
bool is_ribbon(const std::vector<Cell>& cells);
/// (-1)^(rows - 1) for the ribbon outer/inner; throws MalformedPartition if
/// the skew shape is not a nonempty ribbon.
int ribbon_sign(const Partition& outer, const Partition& inner);

struct Ribbon {
  std::vector<Cell> cells;
  int rows = 0;

  int size() const { return static_cast<int>(cells.size()); }
  int sign() const { return rows % 2 == 1 ? 1 : -1; }
};

/// Ribbons listed in removal order: the first one contains the bottom cell
/// of the first column of the full shape.
struct RimHookDecomposition {
  std::vector<Ribbon> ribbons;
  int sign = 1;
};

/// Special rim-hook tableaux of shape lambda and type mu. Zero-length
/// ribbons are treated as absent.
std::vector<RimHookDecomposition> srht_enumerate(const Partition& lambda, const Partition& mu);

/// Signed SRHT counts of shape lambda for every type at once.
std::map<Partition, BigInt> srht_signed_by_type(const Partition& lambda);

/// K'_{mu lambda}, the coefficient of e_mu in s_{lambda'}.
BigInt inverse_kostka(const Partition& mu, const Partition& lambda);

/// f_j + f_{d+1-j} >= k and f_{j+1} + f_{d+1-j} < k for 1 <= j <= d, f_{d+1} = 0.
bool frob_condition(const Partition& lambda, int k);

/// (k^q 1^r)
Partition hook_type(int k, int q, int r);

/// ASC partitions of 2s admitting an SRHT of type (k^rank 1^rest).
std::vector<Partition> asc_1k(int s, int k);

/// a_mu of e_s o e_2 for mu with parts in {1, k} only.
std::map<Partition, BigInt> plethysm_e_coeffs(int s, int k);

/// a_mu of e_s o e_2 over all mu of 2s.
std::map<Partition, BigInt> plethysm_e_expansion(int s);

/// Sum_s (-1)^s x^s (e_s o e_2)(gamma) with e_1 = a, e_k = (-1)^(k+1) b and
/// all other e_j = 0.
XPoly denominator_from_srht(int k);

}  // namespace bartiler
