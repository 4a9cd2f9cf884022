#pragma once

#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ehrstab/graphs.hpp"
#include "ehrstab/lattice.hpp"

namespace ehrstab {

struct TraceWitness {
  LatticeVector eta;   // level-1 factor
  LatticeVector zeta;  // level-(-1) factor, degree may be negative
};

/// Membership in the trace ideal of the canonical module, decided by a
/// bounded search for a decomposition mu = eta + zeta with eta at level 1
/// and zeta at level -1. Vertexwise 1 <= eta(v) <= mu(v)+1 and
/// 3 <= deg eta <= deg mu + 3 make the search finite.
std::optional<TraceWitness> in_trace(const LatticeVector& mu, const Graph& g);

struct RadicalCertificate {
  LatticeVector mu;
  int power = 0;  // ell - 2
  LatticeVector eta;
  LatticeVector zeta;
};

/// Explicit certificate that mu lies in the radical of the trace ideal on
/// C_{2l+1}: power*mu = eta + zeta with both factors passing their level
/// tests. Applies the all-positive construction when every vertex value is
/// positive, otherwise the slack construction when sum < ell*deg; throws
/// std::invalid_argument when neither hypothesis holds, std::logic_error
/// when a constructed factor fails its inequalities.
RadicalCertificate certify_radical(const LatticeVector& mu, int ell);

/// Monomial membership in the prime of the face {f(v_i)=0, f^+(V)=ell}:
/// mu(v_i) > 0 or sum < ell*deg.
bool in_face_prime(const LatticeVector& mu, int i, int ell);

struct LocusReport {
  int ell = 0;
  int degree_bound = 0;
  long long trace_monomials = 0;
  long long intersection_monomials = 0;
  bool pass = false;
  std::optional<LatticeVector> counterexample;
  // Per degree, intersection monomials not lying in the trace ideal itself
  // (radical-versus-trace data, recorded but not asserted).
  std::map<int, long long> outside_trace_by_degree;

  nlohmann::json to_json() const;
};

/// Bounded-degree verification that the radical of the trace ideal equals
/// the intersection of the 2l+1 face primes: (a) every trace monomial of
/// degree <= degree_bound lies in every face prime; (b) every level-0
/// monomial of degree <= degree_bound lying in all face primes admits a
/// certificate, re-verified by the level tests and confirmed by in_trace.
LocusReport verify_nongorenstein_locus(int ell, int degree_bound);

/// Affine dimension of the face {f(v_i)=0, f^+(V)=ell} of stab(C_{2l+1}),
/// from the exact rank of differences of its dilation-1 lattice points.
int face_dimension(int i, int ell);

}  // namespace ehrstab
