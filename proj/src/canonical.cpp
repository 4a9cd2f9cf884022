#include "ehrstab/canonical.hpp"

#include <set>
#include <stdexcept>

namespace ehrstab {

LatticeVector uniform_generator(int ell, int k) {
  if (ell < 3) throw std::invalid_argument("requires ell >= 3");
  if (k < 1) throw std::invalid_argument("requires k >= 1");
  return LatticeVector::uniform(2 * ell + 1, k, 2 * k + 1);
}

std::vector<LatticeVector> generator_family(int ell) {
  std::vector<LatticeVector> fam;
  for (int k = 1; k <= ell - 1; ++k) fam.push_back(uniform_generator(ell, k));
  return fam;
}

long long odd_cycle_margin(const LatticeVector& eta, int ell) {
  return static_cast<long long>(ell) * eta.degree - eta.sum();
}

bool is_divisible(const LatticeVector& a, const LatticeVector& b,
                  const InequalitySystem& level0) {
  return level0.contains(a - b);
}

std::vector<LatticeVector> canonical_generators(const Graph& g, int search_degree) {
  const int cyclen = cycle_length_of(g);
  const int ell = (cyclen >= 7 && cyclen % 2 == 1) ? (cyclen - 1) / 2 : 0;
  if (ell > 0 && search_degree < 2 * ell - 1)
    throw std::invalid_argument("search degree below the last expected generator");

  InequalitySystem level1(g, 1);
  InequalitySystem level0(g, 0);
  std::vector<std::vector<LatticeVector>> omega(search_degree + 1);
  std::vector<std::vector<LatticeVector>> ring(search_degree + 1);
  for (int d = 3; d <= search_degree; ++d) omega[d] = level1.enumerate(d);
  for (int d = 1; d + 3 <= search_degree; ++d) ring[d] = level0.enumerate(d);

  std::vector<LatticeVector> gens;
  for (int d = 3; d <= search_degree; ++d) {
    if (omega[d].empty()) continue;
    // everything reachable as (lower omega monomial) * (ring monomial)
    std::set<LatticeVector> reachable;
    for (int dd = 3; dd < d; ++dd)
      for (const auto& w : omega[dd])
        for (const auto& u : ring[d - dd]) reachable.insert(w + u);
    for (const auto& m : omega[d])
      if (!reachable.count(m)) {
        if (ell > 0 && d > 2 * ell - 1)
          throw std::logic_error("canonical generator above expected top degree");
        gens.push_back(m);
      }
  }
  return gens;
}

}  // namespace ehrstab
