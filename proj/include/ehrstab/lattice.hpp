#pragma once

#include <compare>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ehrstab/graphs.hpp"
#include "ehrstab/numeric.hpp"

namespace ehrstab {

/// Integer-valued function on V together with a degree (the value at the
/// extra grading coordinate). Componentwise arithmetic includes the degree.
struct LatticeVector {
  std::vector<int> values;
  int degree = 0;

  LatticeVector() = default;
  LatticeVector(std::vector<int> v, int deg) : values(std::move(v)), degree(deg) {}

  static LatticeVector zero(int n) { return LatticeVector(std::vector<int>(n, 0), 0); }
  static LatticeVector uniform(int n, int value, int deg) {
    return LatticeVector(std::vector<int>(n, value), deg);
  }

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector scaled(int c) const;
  bool operator==(const LatticeVector& o) const = default;
  /// Lexicographic by value tuple, then degree. Fixes all output orders.
  std::strong_ordering operator<=>(const LatticeVector& o) const;

  long long sum() const;  // sum of vertex values

  nlohmann::json to_json() const;  // {"deg": d, "v": [...]}
  static LatticeVector from_json(const nlohmann::json& j);
};

/// Sum of mu over the vertex subset B. Rejects out-of-range indices.
long long plus_on(const LatticeVector& mu, const std::vector<int>& b);

/// The inequality system cutting out the degree-graded lattice sets of the
/// stable set polytope at a given level n: every vertex value >= n, every
/// maximal small-clique sum <= deg - n, and every chordless odd-cycle sum
/// <= deg*(|C|-1)/2 - n.
class InequalitySystem {
 public:
  InequalitySystem(const Graph& g, int level);

  int level() const { return level_; }
  int vertex_count() const { return nverts_; }

  bool contains(const LatticeVector& mu) const;

  /// Exactly the vectors of the given degree passing contains(), in
  /// lexicographic order, duplicate-free. Throws ResourceLimitError when
  /// the a-priori box bound exceeds the configured cell limit.
  std::vector<LatticeVector> enumerate(int degree) const;

  struct Cap {
    std::vector<int> members;
    int degree_multiplier;  // bound = degree_multiplier * deg - level
  };
  const std::vector<Cap>& caps() const { return caps_; }

 private:
  int level_;
  int nverts_;
  std::vector<Cap> caps_;
  std::vector<int> largest_cap_;  // per vertex, max member count of a cap containing it
};

/// Superadditivity probe: a at level m plus b at level n lands at level m+n.
bool minkowski_check(const Graph& g, const LatticeVector& a, int m,
                     const LatticeVector& b, int n);

/// Per-degree solution lists of one inequality system, degrees 0..max_degree.
struct GradedMonomialSet {
  int level = 0;
  std::vector<std::vector<LatticeVector>> by_degree;
};

GradedMonomialSet enumerate_up_to(const Graph& g, int level, int max_degree);

}  // namespace ehrstab
