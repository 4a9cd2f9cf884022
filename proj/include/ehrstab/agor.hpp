#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ehrstab/ehrhart.hpp"
#include "ehrstab/lattice.hpp"

namespace ehrstab {

/// The 2l+1 degree-1 generators of the face subring on C_{2l+1}: rotations
/// of the characteristic vector of the maximum stable set {v_0, v_2, ...,
/// v_{2l-2}}.
std::vector<LatticeVector> face_generators(int ell);

/// Degree-d monomials of the face subring: level-0 vectors with vertex sum
/// equal to ell*d.
std::vector<LatticeVector> face_subring_slice(int ell, int d);

/// Writes a face-subring monomial as a sum of face generators by the
/// constructive reduction (rotate, subtract a generator, recurse). Returns
/// the generator indices, sorted; every intermediate remainder is
/// re-verified to stay in the face subring.
std::vector<int> face_decompose(const LatticeVector& mu, int ell);

/// Degree-d level-1 vectors with margin >= ell-1, i.e. the monomials
/// divisible by the minimal canonical generator. Cross-checked against the
/// independent description {uniform_generator(ell,1) + u : u level-0 of
/// degree d-3}; a mismatch aborts.
std::vector<LatticeVector> image_slice(int ell, int d);

/// Degree-d level-1 vectors with margin exactly ell-k (2 <= k <= ell-1),
/// verified to biject with the face subring at degree d-(2k+1) via
/// subtraction of uniform_generator(ell,k); a bijection failure aborts.
std::vector<LatticeVector> stratum_slice(int ell, int k, int d);

struct CokernelProfile {
  int ell = 0;
  std::vector<BigInt> dims;        // per-degree dimensions, 0..2*ell+2
  std::vector<BigInt> numerator;   // over (1-x)^(2l+1)
  BigInt multiplicity = 0;         // numerator evaluated at 1
  int min_generators = 0;          // generators surviving the divisibility sieve
};

/// Hilbert profile of the cokernel of the comparison map into the shifted
/// canonical module. Per-degree dimensions are computed two ways for
/// degrees <= enum_degree_bound (whole slice minus image, and the sum of
/// the margin strata) and must agree with the closed form; any mismatch
/// aborts with the offending degree.
CokernelProfile cokernel_profile(int ell, int enum_degree_bound);

struct HIdentityReport {
  int ell = 0;
  HVector hv;
  bool pass = false;
  int first_failing_index = -1;
  bool series_identity = false;

  nlohmann::json to_json() const;
};

/// Checks the near-palindromic h-vector identities h_s = h_0,
/// h_{s-1} = h_1, h_{s-i} = h_i + (-1)^i for 2 <= i <= 2l-3, and the exact
/// rational-series identity between the shifted canonical module, the ring
/// and the cokernel.
HIdentityReport check_h_identity(int ell);

struct AlmostGorensteinVerdict {
  int ell = 0;
  BigInt multiplicity = 0;
  int min_generators = 0;
  bool almost_gorenstein = false;

  nlohmann::json to_json() const;
};

/// Ulrich test: multiplicity of the cokernel equals its minimal number of
/// generators (both ell-2).
AlmostGorensteinVerdict almost_gorenstein_verdict(int ell, int enum_degree_bound);

/// Rank of the dilation-1 difference matrix spanning the face
/// {f(v_0)=0, f^+(V)=ell}; equals ell.
int face_difference_rank(int ell);

/// Rank of the dilation-1 difference matrix spanning the face
/// {f^+(V)=ell}; equals 2*ell.
int full_face_difference_rank(int ell);

}  // namespace ehrstab
