#include "ehrstab/agor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ehrstab/canonical.hpp"

namespace ehrstab {

std::vector<LatticeVector> face_generators(int ell) {
  if (ell < 3) throw std::invalid_argument("requires ell >= 3");
  const int n = 2 * ell + 1;
  std::vector<LatticeVector> fam;
  for (int i = 0; i < n; ++i) {
    LatticeVector mu(std::vector<int>(n, 0), 1);
    for (int step = 0; step <= 2 * ell - 2; step += 2) mu.values[(i + step) % n] = 1;
    fam.push_back(std::move(mu));
  }
  return fam;
}

std::vector<LatticeVector> face_subring_slice(int ell, int d) {
  Graph g = make_cycle(2 * ell + 1);
  std::vector<LatticeVector> out;
  for (const auto& mu : InequalitySystem(g, 0).enumerate(d))
    if (mu.sum() == static_cast<long long>(ell) * d) out.push_back(mu);
  return out;
}

namespace {

bool in_face_subring(const InequalitySystem& level0, const LatticeVector& mu, int ell) {
  return level0.contains(mu) && mu.sum() == static_cast<long long>(ell) * mu.degree;
}

}  // namespace

std::vector<int> face_decompose(const LatticeVector& mu0, int ell) {
  const int n = 2 * ell + 1;
  if (static_cast<int>(mu0.values.size()) != n)
    throw std::invalid_argument("vector has wrong vertex count for the cycle");
  Graph g = make_cycle(n);
  InequalitySystem level0(g, 0);
  if (!in_face_subring(level0, mu0, ell))
    throw std::invalid_argument("input is not a face-subring monomial");

  auto fam = face_generators(ell);
  LatticeVector mu = mu0;
  std::vector<int> out;
  while (mu.degree > 0) {
    int idx = -1;
    const bool all_positive =
        std::all_of(mu.values.begin(), mu.values.end(), [](int v) { return v > 0; });
    if (all_positive) {
      // some edge sum is below the degree; rotate it to the front and peel
      // the generator two steps in
      for (int i = 0; i < n; ++i)
        if (mu.values[i] + mu.values[(i + 1) % n] < mu.degree) {
          idx = (2 + i) % n;
          break;
        }
    } else {
      int zero = -1;
      for (int i = 0; i < n; ++i)
        if (mu.values[i] == 0) {
          zero = i;
          break;
        }
      // with the zero rotated to the front, every odd edge is tight; peel
      // the all-odd generator, or the one anchored at the first nonzero
      // even position
      int j = 0;
      for (int i = 1; i <= ell; ++i)
        if (mu.values[(2 * i + zero) % n] != 0) {
          j = i;
          break;
        }
      idx = (j == 0 ? 1 + zero : 2 * j + zero) % n;
    }
    if (idx < 0) throw std::logic_error("face reduction found no peelable edge");
    mu = mu - fam[idx];
    if (!in_face_subring(level0, mu, ell))
      throw std::logic_error("face reduction left the face subring");
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> image_slice(int ell, int d) {
  if (d < 3) throw std::invalid_argument("requires degree >= 3");
  Graph g = make_cycle(2 * ell + 1);
  std::vector<LatticeVector> out;
  for (const auto& eta : InequalitySystem(g, 1).enumerate(d))
    if (odd_cycle_margin(eta, ell) >= ell - 1) out.push_back(eta);

  // independent description: minimal generator plus a level-0 monomial
  const LatticeVector base = uniform_generator(ell, 1);
  std::set<LatticeVector> alt;
  for (const auto& u : InequalitySystem(g, 0).enumerate(d - 3)) alt.insert(base + u);
  if (alt != std::set<LatticeVector>(out.begin(), out.end()))
    throw std::logic_error("image slice cross-check mismatch");
  return out;
}

std::vector<LatticeVector> stratum_slice(int ell, int k, int d) {
  if (k < 2 || k > ell - 1) throw std::invalid_argument("stratum index out of range");
  Graph g = make_cycle(2 * ell + 1);
  std::vector<LatticeVector> out;
  for (const auto& eta : InequalitySystem(g, 1).enumerate(d))
    if (odd_cycle_margin(eta, ell) == ell - k) out.push_back(eta);

  // bijection with the face subring, shifted by the stratum generator
  const LatticeVector base = uniform_generator(ell, k);
  auto face = face_subring_slice(ell, d - (2 * k + 1));
  if (face.size() != out.size())
    throw std::logic_error("stratum slice bijection count mismatch");
  std::set<LatticeVector> face_set(face.begin(), face.end());
  for (const auto& eta : out)
    if (!face_set.count(eta - base))
      throw std::logic_error("stratum slice element fails the shift bijection");
  return out;
}

CokernelProfile cokernel_profile(int ell, int enum_degree_bound) {
  if (ell < 3) throw std::invalid_argument("requires ell >= 3");
  Graph g = make_cycle(2 * ell + 1);
  InequalitySystem level1(g, 1);

  CokernelProfile profile;
  profile.ell = ell;

  // closed form: the cokernel dimension at degree m is the sum over the
  // strata of the face-subring dimension binom(m+2-2k+2l, 2l)
  auto closed_dim = [&](int m) {
    BigInt s = 0;
    for (int k = 2; k <= ell - 1; ++k)
      s += binomial(m + 2 - 2 * k + 2 * ell, 2 * ell);
    return s;
  };

  for (int m = 0; m <= enum_degree_bound; ++m) {
    const int d = m + 3;
    const long long whole = static_cast<long long>(level1.enumerate(d).size());
    const long long image = static_cast<long long>(image_slice(ell, d).size());
    BigInt via_strata = 0;
    for (int k = 2; k <= ell - 1; ++k)
      via_strata += static_cast<long long>(stratum_slice(ell, k, d).size());
    const BigInt direct = whole - image;
    if (direct != via_strata || direct != closed_dim(m))
      throw std::logic_error("cokernel dimension mismatch at degree " +
                             std::to_string(m));
  }

  const int top = 2 * ell + 2;
  for (int m = 0; m <= top; ++m) profile.dims.push_back(closed_dim(m));

  // recover the numerator over (1-x)^(2l+1) by finite differences
  for (int j = 0; j <= top; ++j) {
    BigInt a = 0;
    for (int i = 0; i <= std::min(j, 2 * ell + 1); ++i) {
      BigInt term = binomial(2 * ell + 1, i) * profile.dims[j - i];
      if (i % 2 == 0)
        a += term;
      else
        a -= term;
    }
    profile.numerator.push_back(a);
  }
  while (!profile.numerator.empty() && profile.numerator.back() == 0)
    profile.numerator.pop_back();
  for (size_t j = 0; j < profile.numerator.size(); ++j) {
    const bool expected = (j >= 2 && j % 2 == 0 && j <= 2u * ell - 4);
    if (profile.numerator[j] != (expected ? 1 : 0))
      throw std::logic_error("cokernel series numerator has unexpected shape");
  }
  for (const auto& c : profile.numerator) profile.multiplicity += c;

  // minimal generators: the stratum generators surviving the divisibility
  // sieve against the whole generator family
  InequalitySystem level0(g, 0);
  for (int k = 2; k <= ell - 1; ++k) {
    bool divisible = false;
    for (int j = 1; j <= ell - 1; ++j)
      if (j != k && is_divisible(uniform_generator(ell, k),
                                 uniform_generator(ell, j), level0))
        divisible = true;
    if (!divisible) ++profile.min_generators;
  }
  return profile;
}

nlohmann::json HIdentityReport::to_json() const {
  nlohmann::json hj = nlohmann::json::array();
  for (const auto& c : hv.h) hj.push_back(c.str());
  return nlohmann::json{
      {"ell", ell},
      {"hstar", hj},
      {"identities", pass ? "pass" : "fail"},
      {"first_failing_index", first_failing_index},
      {"series_identity", series_identity},
  };
}

HIdentityReport check_h_identity(int ell) {
  if (ell < 3) throw std::invalid_argument("requires ell >= 3");
  HIdentityReport report;
  report.ell = ell;
  report.hv = hstar(make_cycle(2 * ell + 1));
  const auto& h = report.hv.h;
  const int s = report.hv.s();

  report.pass = true;
  auto fail_at = [&](int i) {
    if (report.pass) report.first_failing_index = i;
    report.pass = false;
  };
  if (s != 2 * ell - 1) fail_at(-1);
  if (report.pass && (h[s] != h[0] || h[0] != 1)) fail_at(0);
  if (report.pass && h[s - 1] != h[1]) fail_at(1);
  for (int i = 2; report.pass && i <= 2 * ell - 3; ++i) {
    const BigInt expected = h[i] + (i % 2 == 0 ? 1 : -1);
    if (h[s - i] != expected) fail_at(i);
  }

  // exact series identity: shifted canonical module = ring + cokernel
  std::vector<BigInt> ring_num(h.begin(), h.end());
  std::vector<BigInt> rev_num(h.rbegin(), h.rend());
  std::vector<BigInt> cok_num(2 * ell - 2, 0);
  for (int j = 2; j <= 2 * ell - 3; ++j) cok_num[j] = (j % 2 == 0) ? 1 : -1;
  RationalSeries ring_series(ring_num, 2 * ell + 2);
  RationalSeries shifted_canonical(rev_num, 2 * ell + 2);
  RationalSeries cokernel(cok_num, 2 * ell + 2);
  report.series_identity = (shifted_canonical == ring_series + cokernel);
  if (!report.series_identity) report.pass = false;
  return report;
}

nlohmann::json AlmostGorensteinVerdict::to_json() const {
  return nlohmann::json{
      {"ell", ell},
      {"ulrich", {{"e", multiplicity.str()}, {"mu", min_generators}}},
      {"almost_gorenstein", almost_gorenstein},
  };
}

AlmostGorensteinVerdict almost_gorenstein_verdict(int ell, int enum_degree_bound) {
  auto profile = cokernel_profile(ell, enum_degree_bound);
  AlmostGorensteinVerdict verdict;
  verdict.ell = ell;
  verdict.multiplicity = profile.multiplicity;
  verdict.min_generators = profile.min_generators;
  verdict.almost_gorenstein =
      profile.multiplicity == profile.min_generators &&
      profile.min_generators == ell - 2;
  return verdict;
}

namespace {

int rank_of_differences(int ell, const std::vector<std::pair<int, int>>& pairs) {
  auto fam = face_generators(ell);
  std::vector<std::vector<BigInt>> rows;
  for (auto [a, b] : pairs) {
    std::vector<BigInt> row;
    for (size_t v = 0; v < fam[a].values.size(); ++v)
      row.emplace_back(fam[a].values[v] - fam[b].values[v]);
    rows.push_back(std::move(row));
  }
  return integer_rank(std::move(rows));
}

}  // namespace

int face_difference_rank(int ell) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < ell; ++i) pairs.emplace_back(2 * i + 2, 2 * i);
  pairs.emplace_back(1, 2 * ell);
  return rank_of_differences(ell, pairs);
}

int full_face_difference_rank(int ell) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= 2 * ell - 2; ++i) pairs.emplace_back(i + 2, i);
  pairs.emplace_back(0, 2 * ell - 1);
  pairs.emplace_back(1, 2 * ell);
  return rank_of_differences(ell, pairs);
}

}  // namespace ehrstab
