#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "ehrstab/canonical.hpp"
#include "ehrstab/trace.hpp"

using namespace ehrstab;

TEST_CASE("face prime membership") {
  // mu(v_i) > 0 or slack in the odd-cycle sum
  LatticeVector tight({1, 0, 1, 0, 1, 0, 0}, 1);  // sum 3 = 3*1, tight
  CHECK(in_face_prime(tight, 0, 3));
  CHECK_FALSE(in_face_prime(tight, 1, 3));
  LatticeVector slack({0, 0, 1, 0, 1, 0, 0}, 1);  // sum 2 < 3
  for (int i = 0; i < 7; ++i) CHECK(in_face_prime(slack, i, 3));
  CHECK_THROWS_AS(in_face_prime(tight, 7, 3), std::invalid_argument);
}

TEST_CASE("trace membership finds witnesses") {
  Graph g = make_cycle(7);
  // eta_1 + eta_1 lies in the trace (eta_1 * eta_1 * omega^(-1) term)
  auto w = in_trace(uniform_generator(3, 1).scaled(2), g);
  REQUIRE(w.has_value());
  InequalitySystem level1(g, 1), level_neg(g, -1);
  CHECK(level1.contains(w->eta));
  CHECK(level_neg.contains(w->zeta));
  CHECK(w->eta + w->zeta == uniform_generator(3, 1).scaled(2));
}

TEST_CASE("slack degree-1 monomials lie in the trace") {
  Graph g = make_cycle(7);
  LatticeVector slack({0, 0, 1, 0, 1, 0, 0}, 1);
  auto w = in_trace(slack, g);
  REQUIRE(w.has_value());
  CHECK(w->zeta.degree < 0);  // only a fractional factor can reach degree 1
  CHECK(w->eta + w->zeta == slack);
}

TEST_CASE("tight monomials avoid the trace") {
  Graph g = make_cycle(7);
  // a maximum stable set: misses the face prime at its zeros, not in trace
  CHECK_FALSE(in_trace(LatticeVector({1, 0, 1, 0, 1, 0, 0}, 1), g).has_value());
  // the unit of the ring
  CHECK_FALSE(in_trace(LatticeVector::zero(7), g).has_value());
}

TEST_CASE("radical certificates, all-positive branch") {
  auto mu = LatticeVector::uniform(7, 1, 3);
  auto cert = certify_radical(mu, 3);
  CHECK(cert.power == 1);
  CHECK(cert.eta == LatticeVector::uniform(7, 2, 5));
  CHECK(cert.eta + cert.zeta == mu.scaled(1));
}

TEST_CASE("radical certificates, slack branch") {
  LatticeVector mu({0, 0, 1, 0, 1, 0, 0}, 1);
  auto cert = certify_radical(mu, 3);
  CHECK(cert.power == 1);
  CHECK(cert.eta == LatticeVector::uniform(7, 1, 3));
}

TEST_CASE("radical certificates reject outside the intersection") {
  // zero coordinate and tight sum: outside some face prime
  LatticeVector mu({1, 0, 1, 0, 1, 0, 0}, 1);
  CHECK_THROWS_AS(certify_radical(mu, 3), std::invalid_argument);
  // not even in the ring
  CHECK_THROWS_AS(certify_radical(LatticeVector({2, 0, 0, 0, 0, 0, 0}, 1), 3),
                  std::invalid_argument);
}

TEST_CASE("certificates at ell = 4") {
  LatticeVector mu = LatticeVector::uniform(9, 1, 3);
  auto cert = certify_radical(mu, 4);
  CHECK(cert.power == 2);
  CHECK(cert.eta == LatticeVector::uniform(9, 3, 7));
  Graph g = make_cycle(9);
  CHECK(InequalitySystem(g, 1).contains(cert.eta));
  CHECK(InequalitySystem(g, -1).contains(cert.zeta));
}

TEST_CASE("face dimensions") {
  for (int i = 0; i < 7; ++i) CHECK(face_dimension(i, 3) == 3);
  CHECK(face_dimension(0, 4) == 4);
}

TEST_CASE("locus verification at ell = 3") {
  auto report = verify_nongorenstein_locus(3, 3);
  CHECK(report.pass);
  CHECK(report.ell == 3);
  CHECK_FALSE(report.counterexample.has_value());
  // frozen degree-slice counts of the face-prime intersection: 22 + 260 + 1563
  CHECK(report.intersection_monomials == 1845);
  CHECK(report.trace_monomials == 1845);
  CHECK(report.outside_trace_by_degree.empty());
  auto j = report.to_json();
  CHECK(j.at("status") == "pass");
  CHECK(j.at("check") == "nongorenstein-locus");
}

TEST_CASE("locus verification rejects bad arguments") {
  CHECK_THROWS_AS(verify_nongorenstein_locus(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(verify_nongorenstein_locus(3, 2), std::invalid_argument);
}
