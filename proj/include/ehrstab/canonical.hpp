#pragma once

#include <vector>

#include "ehrstab/graphs.hpp"
#include "ehrstab/lattice.hpp"

namespace ehrstab {

/// On C_{2l+1}: the vector with every vertex value k and degree 2k+1.
/// For k = 1..l-1 these are the monomial generators of the canonical ideal.
LatticeVector uniform_generator(int ell, int k);

/// uniform_generator(ell, k) for k = 1..ell-1.
std::vector<LatticeVector> generator_family(int ell);

/// Slack of the odd-cycle inequality at level 1: ell*deg - sum over V.
long long odd_cycle_margin(const LatticeVector& eta, int ell);

/// Monomial divisibility inside the level-0 semigroup: a - b passes the
/// level-0 test.
bool is_divisible(const LatticeVector& a, const LatticeVector& b,
                  const InequalitySystem& level0);

/// Minimal monomial generators of the canonical ideal, found by sieving
/// each degree-d level-1 vector against sums (level-0 monomial of positive
/// degree) + (lower-degree level-1 monomial), degrees 3..search_degree.
/// For odd cycles C_{2l+1}, l >= 3, any generator of degree > 2l-1 is a
/// contradiction and raises std::logic_error.
std::vector<LatticeVector> canonical_generators(const Graph& g, int search_degree);

}  // namespace ehrstab
