// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gkdim/simplicity.hpp"

using namespace gkdim;

TEST_SUITE("simplicity") {

TEST_CASE("McConnell criterion on the worked examples") {
  // beta = 0, alpha = (t1, t2): simple.
  DerivationSpec generic = DerivationSpec::mcconnell_generic(2);
  CHECK(check_simplicity(generic).status == SimplicityStatus::SimpleByMcConnell);

  // beta = 0, alpha = (1, 2): dependent over Q, criterion fails.
  DerivationSpec dependent({Scalar::integer(1, 0), Scalar::integer(2, 0)},
                           {Scalar::zero(0), Scalar::zero(0)});
  SimplicityVerdict v = check_simplicity(dependent);
  CHECK(v.status == SimplicityStatus::NotApplicable);
  CHECK(v.detail.find("dependency") != std::string::npos);

  // beta = (1, 0): no criterion in scope.
  DerivationSpec affine({Scalar::transcendental(0, 2), Scalar::transcendental(1, 2)},
                        {Scalar::one(2), Scalar::zero(2)});
  CHECK(check_simplicity(affine).status == SimplicityStatus::UnknownGeneralCase);
}

TEST_CASE("criterion is invariant under common scaling and permutation") {
  std::mt19937 rng(701);
  std::uniform_int_distribution<long> scale_dist(1, 7);
  for (int iter = 0; iter < 10; ++iter) {
    const int n = 3;
    std::vector<Scalar> alpha;
    for (int i = 0; i < n; ++i) alpha.push_back(Scalar::transcendental(i, n));
    if (iter % 2) alpha[1] = alpha[0] + alpha[2];  // make it dependent sometimes

    DerivationSpec d(alpha, std::vector<Scalar>(n, Scalar::zero(n)));
    const SimplicityStatus base = check_simplicity(d).status;

    std::vector<Scalar> scaled;
    const Scalar c = Scalar::from_rational(Rational(scale_dist(rng), scale_dist(rng)), n);
    for (const Scalar& a : alpha) scaled.push_back(a * c);
    std::shuffle(scaled.begin(), scaled.end(), rng);
    DerivationSpec d2(scaled, std::vector<Scalar>(n, Scalar::zero(n)));
    CHECK(check_simplicity(d2).status == base);
  }
}

TEST_CASE("dichotomy audit verdicts across n and degree") {
  for (int n = 2; n <= 5; ++n) {
    for (int deg = 0; deg <= n + 1; ++deg) {
      auto rows = dichotomy_audit({{"m", deg, false}}, n);
      REQUIRE(rows.size() == 1);
      const bool allowed = deg == 1 || deg == n;
      CHECK((rows[0].verdict == AuditVerdict::ConsistentWithSimple) == allowed);
      if (deg == 0) CHECK(rows[0].justification == "gk_zero_impossible");
      if (deg > 1 && deg < n) CHECK(rows[0].justification == "dichotomy_gap");
      if (deg == n + 1) CHECK(rows[0].justification == "exceeds_simple_bound");
    }
  }
}

TEST_CASE("audit flags contradicted assertions and rejects unstable input") {
  auto rows = dichotomy_audit({{"claimed", 2, true}}, 3);
  CHECK(rows[0].verdict == AuditVerdict::CertifiedNotSimple);
  CHECK(rows[0].justification.find("contradicts_assertion") != std::string::npos);

  try {
    dichotomy_audit({{"bad", std::nullopt, false}}, 3);
    FAIL("expected UnstableInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnstableInput);
  }
}

}  // TEST_SUITE
