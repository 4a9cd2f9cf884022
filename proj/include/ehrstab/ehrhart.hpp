#pragma once

#include <vector>

#include "ehrstab/graphs.hpp"
#include "ehrstab/lattice.hpp"
#include "ehrstab/numeric.hpp"

namespace ehrstab {

/// Lattice points of t*stab(g), closed or relative-interior, counted by
/// enumerating the level-0 (resp. level-1) system at degree t.
BigInt count_points(const Graph& g, int t, bool interior);

/// Cycle-specialized counter: dynamic programming around the cycle with
/// state (first value, current value, running sum). Agrees with
/// count_points on C_n. Rejects n < 4.
BigInt count_points_cycle_dp(int n, int t, bool interior);

struct EhrhartCounts {
  std::vector<BigInt> closed;    // L(0..T)
  std::vector<BigInt> interior;  // L°(0..T)
};

/// Counts for t = 0..max_dilation, using the DP kernel for cycle graphs of
/// length >= 4 and the generic enumerator otherwise. Dilations may be
/// evaluated concurrently when jobs > 1; output order is deterministic.
EhrhartCounts ehrhart_profile(const Graph& g, int max_dilation, int jobs = 1);

struct HVector {
  std::vector<BigInt> h;  // h_0..h_s, trailing zeros trimmed
  int dim = 0;            // ambient polytope dimension

  int s() const { return static_cast<int>(h.size()) - 1; }
  bool palindromic() const;
};

/// h* by finite-difference inversion from L(0..d). Throws if any entry is
/// negative (a counting bug).
HVector hstar_from_counts(const std::vector<BigInt>& counts, int dim);

HVector hstar(const Graph& g);

/// Negative of the least dilation with an interior lattice point.
int a_invariant(const Graph& g);

/// Integer-coefficient numerator over (1 - x)^denom_exponent, kept in the
/// normal form where the numerator is not divisible by (1 - x) unless the
/// exponent is zero.
struct RationalSeries {
  std::vector<BigInt> numerator;  // numerator[i] = coefficient of x^i
  int denom_exponent = 0;

  RationalSeries() = default;
  RationalSeries(std::vector<BigInt> num, int exp);

  void normalize();
  RationalSeries operator+(const RationalSeries& o) const;
  RationalSeries operator-(const RationalSeries& o) const;
  bool operator==(const RationalSeries& o) const;

  /// Coefficient of x^k in the series expansion.
  BigInt coefficient(int k) const;
  BigInt numerator_at_one() const;
};

/// Exact Lagrange evaluation of the degree-(values.size()-1) polynomial
/// through (0, values[0]), (1, values[1]), ... at integer argument t.
BigRat interpolate_at(const std::vector<BigInt>& values, long long t);

/// Interpolates L from dilations 0..d and checks L°(t) = (-1)^d L(-t) for
/// t = 1..max_dilation. On failure reports the first failing t.
bool reciprocity_check(const Graph& g, int max_dilation, int* first_fail = nullptr);

}  // namespace ehrstab
