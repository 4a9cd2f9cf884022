#include "ehrstab/ehrhart.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>

namespace ehrstab {

BigInt count_points(const Graph& g, int t, bool interior) {
  if (t < 0) throw std::invalid_argument("dilation must be nonnegative");
  InequalitySystem sys(g, interior ? 1 : 0);
  return static_cast<long long>(sys.enumerate(t).size());
}

BigInt count_points_cycle_dp(int n, int t, bool interior) {
  if (n < 4) throw std::invalid_argument("DP counter requires cycle length >= 4");
  if (t < 0) throw std::invalid_argument("dilation must be nonnegative");
  const int lo = interior ? 1 : 0;
  const int cap = interior ? t - 1 : t;
  if (cap < 2 * lo) return 0;
  const int hi = cap - lo;
  const bool odd = (n % 2 == 1);
  const int ell = (n - 1) / 2;
  const long long total_cap =
      odd ? (interior ? static_cast<long long>(ell) * t - 1
                      : static_cast<long long>(ell) * t)
          : 0;

  BigInt total = 0;
  for (int first = lo; first <= hi; ++first) {
    if (odd) {
      // dp[value][running sum]
      std::map<std::pair<int, long long>, BigInt> cur;
      if (first <= total_cap) cur[{first, first}] = 1;
      for (int pos = 1; pos < n; ++pos) {
        std::map<std::pair<int, long long>, BigInt> nxt;
        for (const auto& [state, c] : cur) {
          auto [v, s] = state;
          for (int w = lo; w <= std::min(hi, cap - v); ++w)
            if (s + w <= total_cap) nxt[{w, s + w}] += c;
        }
        cur = std::move(nxt);
      }
      for (const auto& [state, c] : cur)
        if (state.first + first <= cap) total += c;
    } else {
      std::vector<BigInt> cur(hi + 1, 0);
      cur[first] = 1;
      for (int pos = 1; pos < n; ++pos) {
        std::vector<BigInt> nxt(hi + 1, 0);
        for (int v = lo; v <= hi; ++v) {
          if (cur[v] == 0) continue;
          for (int w = lo; w <= std::min(hi, cap - v); ++w) nxt[w] += cur[v];
        }
        cur = std::move(nxt);
      }
      for (int v = lo; v <= std::min(hi, cap - first); ++v) total += cur[v];
    }
  }
  return total;
}

namespace {

BigInt one_count(const Graph& g, int cyclen, int t, bool interior) {
  if (cyclen >= 4) return count_points_cycle_dp(cyclen, t, interior);
  return count_points(g, t, interior);
}

}  // namespace

EhrhartCounts ehrhart_profile(const Graph& g, int max_dilation, int jobs) {
  const int cyclen = cycle_length_of(g);
  EhrhartCounts counts;
  counts.closed.resize(max_dilation + 1);
  counts.interior.resize(max_dilation + 1);
  if (jobs > 1) {
    std::vector<std::future<std::pair<BigInt, BigInt>>> futs;
    for (int t = 0; t <= max_dilation; ++t)
      futs.push_back(std::async(std::launch::async, [&, t] {
        return std::make_pair(one_count(g, cyclen, t, false),
                              one_count(g, cyclen, t, true));
      }));
    for (int t = 0; t <= max_dilation; ++t) {
      auto [c, i] = futs[t].get();
      counts.closed[t] = c;
      counts.interior[t] = i;
    }
  } else {
    for (int t = 0; t <= max_dilation; ++t) {
      counts.closed[t] = one_count(g, cyclen, t, false);
      counts.interior[t] = one_count(g, cyclen, t, true);
    }
  }
  return counts;
}

bool HVector::palindromic() const {
  for (size_t i = 0, j = h.size(); i < j; ++i)
    if (h[i] != h[h.size() - 1 - i]) return false;
  return true;
}

HVector hstar_from_counts(const std::vector<BigInt>& counts, int dim) {
  if (static_cast<int>(counts.size()) < dim + 1)
    throw std::invalid_argument("need counts for dilations 0..dim");
  HVector hv;
  hv.dim = dim;
  for (int j = 0; j <= dim; ++j) {
    BigInt hj = 0;
    for (int i = 0; i <= j; ++i) {
      BigInt term = binomial(dim + 1, j - i) * counts[i];
      if ((j - i) % 2 == 0)
        hj += term;
      else
        hj -= term;
    }
    if (hj < 0) throw std::runtime_error("negative h* entry (counting bug)");
    hv.h.push_back(hj);
  }
  while (hv.h.size() > 1 && hv.h.back() == 0) hv.h.pop_back();
  return hv;
}

HVector hstar(const Graph& g) {
  const int d = g.size();  // stable set polytopes are full-dimensional
  return hstar_from_counts(ehrhart_profile(g, d).closed, d);
}

int a_invariant(const Graph& g) {
  const int cyclen = cycle_length_of(g);
  for (int t = 1; t <= g.size() + 1; ++t)
    if (one_count(g, cyclen, t, true) > 0) return -t;
  throw std::runtime_error("no interior point up to dilation dim+1");
}

RationalSeries::RationalSeries(std::vector<BigInt> num, int exp)
    : numerator(std::move(num)), denom_exponent(exp) {
  normalize();
}

void RationalSeries::normalize() {
  while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();
  while (denom_exponent > 0 && !numerator.empty()) {
    // try dividing the numerator by (1 - x)
    BigInt at_one = 0;
    for (const auto& c : numerator) at_one += c;
    if (at_one != 0) break;
    std::vector<BigInt> q(numerator.size() - 1);
    BigInt carry = 0;
    for (size_t i = 0; i + 1 < numerator.size(); ++i) {
      carry += numerator[i];
      q[i] = carry;
    }
    numerator = std::move(q);
    while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();
    --denom_exponent;
  }
}

namespace {

// numerator * (1 - x)^k
std::vector<BigInt> scale_up(std::vector<BigInt> num, int k) {
  for (int step = 0; step < k; ++step) {
    std::vector<BigInt> next(num.size() + 1, 0);
    for (size_t i = 0; i < num.size(); ++i) {
      next[i] += num[i];
      next[i + 1] -= num[i];
    }
    num = std::move(next);
  }
  return num;
}

}  // namespace

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
  const int e = std::max(denom_exponent, o.denom_exponent);
  auto a = scale_up(numerator, e - denom_exponent);
  auto b = scale_up(o.numerator, e - o.denom_exponent);
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return RationalSeries(std::move(a), e);
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const {
  const int e = std::max(denom_exponent, o.denom_exponent);
  auto a = scale_up(numerator, e - denom_exponent);
  auto b = scale_up(o.numerator, e - o.denom_exponent);
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return RationalSeries(std::move(a), e);
}

bool RationalSeries::operator==(const RationalSeries& o) const {
  RationalSeries a = *this, b = o;
  a.normalize();
  b.normalize();
  return a.numerator == b.numerator && a.denom_exponent == b.denom_exponent;
}

BigInt RationalSeries::coefficient(int k) const {
  if (k < 0) return 0;
  BigInt c = 0;
  for (size_t i = 0; i < numerator.size(); ++i) {
    const long long shift = k - static_cast<long long>(i);
    if (shift < 0) break;
    c += numerator[i] * binomial(shift + denom_exponent - 1, denom_exponent - 1);
  }
  return c;
}

BigInt RationalSeries::numerator_at_one() const {
  BigInt s = 0;
  for (const auto& c : numerator) s += c;
  return s;
}

BigRat interpolate_at(const std::vector<BigInt>& values, long long t) {
  const long long d = static_cast<long long>(values.size()) - 1;
  BigRat s = 0;
  for (long long i = 0; i <= d; ++i) {
    BigRat term = values[static_cast<size_t>(i)];
    for (long long j = 0; j <= d; ++j) {
      if (j == i) continue;
      term *= t - j;
      term /= i - j;
    }
    s += term;
  }
  return s;
}

bool reciprocity_check(const Graph& g, int max_dilation, int* first_fail) {
  const int d = g.size();
  if (max_dilation < d + 1)
    throw std::invalid_argument("need max_dilation >= dim + 1");
  auto counts = ehrhart_profile(g, max_dilation);
  std::vector<BigInt> closed(counts.closed.begin(), counts.closed.begin() + d + 1);
  for (int t = 1; t <= max_dilation; ++t) {
    BigRat v = interpolate_at(closed, -t);
    if (d % 2 == 1) v = -v;
    if (boost::multiprecision::denominator(v) != 1 ||
        BigRat(counts.interior[t]) != v) {
      if (first_fail) *first_fail = t;
      return false;
    }
  }
  return true;
}

}  // namespace ehrstab
