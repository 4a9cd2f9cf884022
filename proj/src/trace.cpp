#include "ehrstab/trace.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ehrstab/numeric.hpp"

namespace ehrstab {

namespace {

struct CapState {
  std::vector<int> members;
  long long eta_bound;   // sum of eta over members <= this
  long long zeta_bound;  // sum of zeta over members <= this
  long long eta_partial = 0;
  long long zeta_partial = 0;
  int remaining = 0;
};

}  // namespace

std::optional<TraceWitness> in_trace(const LatticeVector& mu, const Graph& g) {
  if (mu.degree < 0)
    throw std::invalid_argument("trace membership needs nonnegative degree");
  const int n = g.size();
  if (static_cast<int>(mu.values.size()) != n)
    throw std::invalid_argument("vector bound to a different graph");

  double volume = static_cast<double>(mu.degree + 1);
  for (int v = 0; v < n; ++v) volume *= mu.values[v] + 1;
  if (volume > static_cast<double>(cell_limit()))
    throw ResourceLimitError("trace decomposition search exceeds cell limit");

  InequalitySystem level1(g, 1);
  InequalitySystem level_neg(g, -1);

  // deg eta <= deg mu + 3: forced by the vertexwise bound eta(v) <= mu(v)+1
  // together with zeta's cap inequalities.
  for (int e = 3; e <= mu.degree + 3; ++e) {
    const int f = mu.degree - e;
    std::vector<CapState> caps;
    std::vector<std::vector<int>> caps_of_vertex(n);
    for (const auto& cap : level1.caps()) {
      CapState cs;
      cs.members = cap.members;
      cs.eta_bound = static_cast<long long>(cap.degree_multiplier) * e - 1;
      cs.zeta_bound = static_cast<long long>(cap.degree_multiplier) * f + 1;
      cs.remaining = static_cast<int>(cap.members.size());
      for (int v : cap.members)
        caps_of_vertex[v].push_back(static_cast<int>(caps.size()));
      caps.push_back(std::move(cs));
    }

    LatticeVector eta(std::vector<int>(n, 0), e);
    std::optional<TraceWitness> found;
    auto dfs = [&](auto&& self, int v) -> bool {
      if (v == n) {
        LatticeVector zeta = mu - eta;
        if (level1.contains(eta) && level_neg.contains(zeta)) {
          found = TraceWitness{eta, zeta};
          return true;
        }
        return false;
      }
      for (int x = 1; x <= mu.values[v] + 1; ++x) {
        eta.values[v] = x;
        bool ok = true;
        for (int c : caps_of_vertex[v]) {
          auto& cs = caps[c];
          cs.eta_partial += x;
          cs.zeta_partial += mu.values[v] - x;
          --cs.remaining;
          if (cs.eta_partial + cs.remaining > cs.eta_bound ||
              cs.zeta_partial - cs.remaining > cs.zeta_bound)
            ok = false;
        }
        bool hit = ok && self(self, v + 1);
        for (int c : caps_of_vertex[v]) {
          auto& cs = caps[c];
          cs.eta_partial -= x;
          cs.zeta_partial -= mu.values[v] - x;
          ++cs.remaining;
        }
        if (hit) return true;
      }
      return false;
    };
    if (dfs(dfs, 0)) return found;
  }
  return std::nullopt;
}

RadicalCertificate certify_radical(const LatticeVector& mu, int ell) {
  if (ell < 3) throw std::invalid_argument("requires ell >= 3");
  const int n = 2 * ell + 1;
  if (static_cast<int>(mu.values.size()) != n)
    throw std::invalid_argument("vector has wrong vertex count for the cycle");
  Graph g = make_cycle(n);
  InequalitySystem level0(g, 0);
  if (!level0.contains(mu))
    throw std::invalid_argument("certificate input must pass the level-0 test");

  const bool all_positive =
      std::all_of(mu.values.begin(), mu.values.end(), [](int v) { return v > 0; });
  const bool slack = mu.sum() < static_cast<long long>(ell) * mu.degree;

  RadicalCertificate cert;
  cert.mu = mu;
  cert.power = ell - 2;
  if (all_positive) {
    cert.eta = LatticeVector::uniform(n, ell - 1, 2 * ell - 1);
  } else if (slack) {
    cert.eta = LatticeVector::uniform(n, 1, 3);
  } else {
    throw std::invalid_argument(
        "neither certificate hypothesis holds: a zero coordinate with tight "
        "vertex sum lies outside the face-prime intersection");
  }
  cert.zeta = mu.scaled(cert.power) - cert.eta;

  if (!(cert.eta + cert.zeta == mu.scaled(cert.power)))
    throw std::logic_error("certificate decomposition identity broken");
  if (!InequalitySystem(g, 1).contains(cert.eta))
    throw std::logic_error("certificate level-1 factor fails its inequalities");
  if (!InequalitySystem(g, -1).contains(cert.zeta))
    throw std::logic_error("certificate level-(-1) factor fails its inequalities");
  return cert;
}

bool in_face_prime(const LatticeVector& mu, int i, int ell) {
  if (i < 0 || i >= static_cast<int>(mu.values.size()))
    throw std::invalid_argument("face index out of range");
  return mu.values[i] > 0 ||
         mu.sum() < static_cast<long long>(ell) * mu.degree;
}

nlohmann::json LocusReport::to_json() const {
  nlohmann::json j{
      {"check", "nongorenstein-locus"},
      {"ell", ell},
      {"degree_bound", degree_bound},
      {"checked",
       {{"trace_monomials", trace_monomials},
        {"intersection_monomials", intersection_monomials}}},
      {"status", pass ? "pass" : "fail"},
  };
  nlohmann::json outside = nlohmann::json::object();
  for (const auto& [deg, cnt] : outside_trace_by_degree)
    outside[std::to_string(deg)] = cnt;
  j["intersection_outside_trace_by_degree"] = outside;
  if (counterexample) j["counterexample"] = counterexample->to_json();
  return j;
}

LocusReport verify_nongorenstein_locus(int ell, int degree_bound) {
  if (ell < 3) throw std::invalid_argument("requires ell >= 3");
  if (degree_bound < 3) throw std::invalid_argument("requires degree bound >= 3");
  const int n = 2 * ell + 1;
  Graph g = make_cycle(n);
  InequalitySystem level1(g, 1);
  InequalitySystem level_neg(g, -1);
  InequalitySystem level0(g, 0);

  LocusReport report;
  report.ell = ell;
  report.degree_bound = degree_bound;

  // All products of a level-1 and a level-(-1) monomial with total degree
  // within the bound. The level-(-1) factor can have degree as low as -3.
  std::map<int, std::vector<LatticeVector>> pos, neg;
  for (int e = 3; e <= degree_bound + 3; ++e) pos[e] = level1.enumerate(e);
  for (int f = -3; f <= degree_bound - 3; ++f) neg[f] = level_neg.enumerate(f);

  std::map<std::pair<int, std::vector<int>>, TraceWitness> trace;
  for (int m = 0; m <= degree_bound; ++m)
    for (int e = 3; e <= m + 3; ++e) {
      const int f = m - e;
      for (const auto& eta : pos[e])
        for (const auto& zeta : neg[f]) {
          LatticeVector prod = eta + zeta;
          trace.emplace(std::pair{m, prod.values}, TraceWitness{eta, zeta});
        }
    }
  report.trace_monomials = static_cast<long long>(trace.size());

  // (a) every trace monomial lies in the ring and in every face prime
  for (const auto& [key, witness] : trace) {
    LatticeVector mu(key.second, key.first);
    if (!level0.contains(mu)) {
      report.counterexample = mu;
      return report;
    }
    for (int i = 0; i < n; ++i)
      if (!in_face_prime(mu, i, ell)) {
        report.counterexample = mu;
        return report;
      }
  }

  // (b) every intersection monomial certifies, and the certified power is
  // independently confirmed by the trace decomposition search
  for (int m = 0; m <= degree_bound; ++m) {
    long long outside = 0;
    for (const auto& mu : level0.enumerate(m)) {
      bool in_all = true;
      for (int i = 0; i < n && in_all; ++i)
        if (!in_face_prime(mu, i, ell)) in_all = false;
      if (!in_all) continue;
      ++report.intersection_monomials;
      RadicalCertificate cert;
      try {
        cert = certify_radical(mu, ell);
      } catch (const std::exception&) {
        report.counterexample = mu;
        return report;
      }
      if (!in_trace(mu.scaled(cert.power), g)) {
        report.counterexample = mu;
        return report;
      }
      if (!trace.count({m, mu.values})) ++outside;
    }
    if (outside > 0) report.outside_trace_by_degree[m] = outside;
  }

  report.pass = true;
  return report;
}

int face_dimension(int i, int ell) {
  if (ell < 3) throw std::invalid_argument("requires ell >= 3");
  const int n = 2 * ell + 1;
  Graph g = make_cycle(n);
  InequalitySystem level0(g, 0);
  std::vector<LatticeVector> points;
  for (const auto& mu : level0.enumerate(1))
    if (mu.values[i] == 0 && mu.sum() == ell) points.push_back(mu);
  if (points.empty()) return -1;
  std::vector<std::vector<BigInt>> diffs;
  for (size_t p = 1; p < points.size(); ++p) {
    std::vector<BigInt> row;
    for (int v = 0; v < n; ++v)
      row.emplace_back(points[p].values[v] - points[0].values[v]);
    diffs.push_back(std::move(row));
  }
  return integer_rank(std::move(diffs));
}

}  // namespace ehrstab
