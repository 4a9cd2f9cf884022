#include "ehrstab/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ehrstab {

long long cell_limit() {
  static const long long limit = [] {
    if (const char* env = std::getenv("CE_CELL_LIMIT")) {
      long long v = std::atoll(env);
      if (v > 0) return v;
    }
    return 100'000'000LL;
  }();
  return limit;
}

BigInt binomial(long long n, long long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

int integer_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    for (int r = row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const BigInt a = m[row][col], b = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] = m[r][c] * a - m[row][c] * b;
    }
    ++row;
    ++rank;
  }
  return rank;
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  if (values.size() != o.values.size())
    throw std::invalid_argument("lattice vectors bound to different graphs");
  LatticeVector r = *this;
  for (size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
  r.degree += o.degree;
  return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  if (values.size() != o.values.size())
    throw std::invalid_argument("lattice vectors bound to different graphs");
  LatticeVector r = *this;
  for (size_t i = 0; i < values.size(); ++i) r.values[i] -= o.values[i];
  r.degree -= o.degree;
  return r;
}

LatticeVector LatticeVector::scaled(int c) const {
  LatticeVector r = *this;
  for (auto& v : r.values) v *= c;
  r.degree *= c;
  return r;
}

std::strong_ordering LatticeVector::operator<=>(const LatticeVector& o) const {
  if (auto c = values <=> o.values; c != 0) return c;
  return degree <=> o.degree;
}

long long LatticeVector::sum() const {
  long long s = 0;
  for (int v : values) s += v;
  return s;
}

nlohmann::json LatticeVector::to_json() const {
  return nlohmann::json{{"deg", degree}, {"v", values}};
}

LatticeVector LatticeVector::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("deg") || !j.contains("v"))
    throw std::invalid_argument("lattice vector JSON needs \"deg\" and \"v\"");
  return LatticeVector(j.at("v").get<std::vector<int>>(), j.at("deg").get<int>());
}

long long plus_on(const LatticeVector& mu, const std::vector<int>& b) {
  long long s = 0;
  for (int i : b) {
    if (i < 0 || i >= static_cast<int>(mu.values.size()))
      throw std::invalid_argument("plus_on: unknown vertex index");
    s += mu.values[i];
  }
  return s;
}

InequalitySystem::InequalitySystem(const Graph& g, int level)
    : level_(level), nverts_(g.size()) {
  auto fam = small_cliques(g);
  for (const auto& k : fam.maximal) caps_.push_back({k, 1});
  auto cycles = chordless_odd_cycles(g, std::max(5, g.size()));
  for (const auto& c : cycles.cycles)
    caps_.push_back({c, static_cast<int>(c.size() - 1) / 2});
  largest_cap_.assign(nverts_, 1);
  for (const auto& cap : caps_)
    if (cap.degree_multiplier == 1)  // clique caps only
      for (int v : cap.members)
        largest_cap_[v] = std::max(largest_cap_[v],
                                   static_cast<int>(cap.members.size()));
}

bool InequalitySystem::contains(const LatticeVector& mu) const {
  if (static_cast<int>(mu.values.size()) != nverts_)
    throw std::invalid_argument("lattice vector bound to a different graph");
  for (int v : mu.values)
    if (v < level_) return false;
  for (const auto& cap : caps_) {
    long long s = 0;
    for (int v : cap.members) s += mu.values[v];
    if (s > static_cast<long long>(cap.degree_multiplier) * mu.degree - level_)
      return false;
  }
  return true;
}

std::vector<LatticeVector> InequalitySystem::enumerate(int degree) const {
  const int n = level_;
  std::vector<int> lo(nverts_, n), hi(nverts_);
  bool empty = false;
  for (int v = 0; v < nverts_; ++v) {
    // clique cap with the other members at their minimum
    hi[v] = (degree - n) - n * (largest_cap_[v] - 1);
    if (hi[v] < lo[v]) empty = true;
  }
  if (empty) return {};

  double cells = 1.0;
  for (int v = 0; v < nverts_; ++v) cells *= hi[v] - lo[v] + 1;
  if (cells > static_cast<double>(cell_limit()))
    throw ResourceLimitError("enumeration box exceeds cell limit");

  // per-cap running sums with remaining-member lower bounds for pruning
  const int ncaps = static_cast<int>(caps_.size());
  std::vector<long long> bound(ncaps), partial(ncaps, 0);
  std::vector<std::vector<int>> caps_of_vertex(nverts_);
  std::vector<int> remaining(ncaps);
  for (int c = 0; c < ncaps; ++c) {
    bound[c] = static_cast<long long>(caps_[c].degree_multiplier) * degree - n;
    remaining[c] = static_cast<int>(caps_[c].members.size());
    for (int v : caps_[c].members) caps_of_vertex[v].push_back(c);
  }

  std::vector<LatticeVector> out;
  LatticeVector cur(std::vector<int>(nverts_, 0), degree);
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == nverts_) {
      out.push_back(cur);
      return;
    }
    for (int x = lo[v]; x <= hi[v]; ++x) {
      cur.values[v] = x;
      bool ok = true;
      for (int c : caps_of_vertex[v]) {
        partial[c] += x;
        --remaining[c];
        if (partial[c] + static_cast<long long>(n) * remaining[c] > bound[c])
          ok = false;
      }
      if (ok) self(self, v + 1);
      for (int c : caps_of_vertex[v]) {
        partial[c] -= x;
        ++remaining[c];
      }
    }
  };
  dfs(dfs, 0);
  return out;  // DFS order is already lexicographic
}

bool minkowski_check(const Graph& g, const LatticeVector& a, int m,
                     const LatticeVector& b, int n) {
  return InequalitySystem(g, m + n).contains(a + b);
}

GradedMonomialSet enumerate_up_to(const Graph& g, int level, int max_degree) {
  GradedMonomialSet set;
  set.level = level;
  InequalitySystem sys(g, level);
  for (int d = 0; d <= max_degree; ++d) set.by_degree.push_back(sys.enumerate(d));
  return set;
}

}  // namespace ehrstab
