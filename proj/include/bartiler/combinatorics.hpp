#pragma once

// Odd compositions, the zig-zag permutation sigma_N and the statistic S_N,
// the polynomials f_N(x;a,b), and the offset compositions TComp(N,k).

#include "bartiler/bigint.hpp"
#include "bartiler/poly.hpp"

#include <set>
#include <vector>

namespace bartiler {

using Composition = std::vector<int>;

/// sigma_N(i): i/2 for even i, N + (1-i)/2 for odd i.
int sigma(int n, int i);

/// All odd compositions with sum <= n, the empty one included. Depth-first
/// with parts ascending, so every prefix precedes its extensions.
std::vector<Composition> enumerate_oc(int n);

/// Sum of sigma_N over the partial sums of alpha.
long s_stat(int n, const Composition& alpha);

/// rem(2 S_N(alpha), N+1): the a-exponent attached to alpha in f_N.
int rem_stat(int n, const Composition& alpha);

/// Normal form (1,...,1,c) reached by maximal slides, via the closed formulas.
Composition canonical_form(int n, const Composition& alpha);

/// Coefficient of x^s in f_N(x;1,1).
BigInt c_closed(long s, int n);

enum class FMode { Closed, Combinatorial };

/// f_N(x;a,b).
XPoly f_poly(int n, FMode mode = FMode::Closed);

/// Compositions of n into k odd parts.
BigInt oc_count_by_parts(long n, long k);
/// Odd compositions of integers <= n into k parts.
BigInt oc_leq_count(long n, long k);

/// {sigma_N(alpha_1 + ... + alpha_j)}.
std::set<int> palpha(int n, const Composition& alpha);

/// Tests whether a nonempty subset of [N] has the form palpha(N, alpha).
bool is_palpha_set(const std::set<int>& s, int n);

/// Compositions of n with parts <= k-1 whose consecutive parts sum to >= k,
/// in lexicographic order.
std::vector<Composition> tcomp_enumerate(int n, int k);

}  // namespace bartiler
