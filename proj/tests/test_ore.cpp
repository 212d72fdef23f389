// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "gkdim/basis.hpp"
#include "gkdim/ore.hpp"
#include "support.hpp"

using namespace gkdim;
namespace ts = gkdim::testsupport;

TEST_SUITE("ore") {

TEST_CASE("commutation rule x*a = a*x + delta(a)") {
  Ambient amb{1, 1};
  DerivationSpec d = DerivationSpec::mcconnell_generic(1);
  Scalar t1 = Scalar::transcendental(0, 1);
  LaurentPoly x1 = LaurentPoly::variable(amb, 0, 1);

  OreElement x = OreElement::x_power(amb, d, 1);
  OreElement a = OreElement::from_laurent(x1, d);

  // x * x1 = x1 x + t1 x1
  OreElement want(amb, d);
  want.add_term(1, x1);
  want.add_term(0, x1.scaled(t1));
  CHECK(x * a == want);

  // x * c = c * x for constants
  OreElement c = OreElement::from_laurent(LaurentPoly::constant(amb, t1), d);
  CHECK(x * c == c * x);

  // x^2 * x1 = x1 x^2 + 2 t1 x1 x + t1^2 x1
  OreElement x2 = OreElement::x_power(amb, d, 2);
  OreElement want2(amb, d);
  want2.add_term(2, x1);
  want2.add_term(1, x1.scaled(Scalar::integer(2, 1) * t1));
  want2.add_term(0, x1.scaled(t1 * t1));
  CHECK(x2 * a == want2);
}

TEST_CASE("associativity on randomized elements") {
  std::mt19937 rng(401);
  for (int trans : {0, 1}) {
    Ambient amb{2, static_cast<std::int32_t>(trans)};
    for (int i = 0; i < 30; ++i) {
      DerivationSpec d = ts::random_derivation(rng, 2, trans);
      OreElement u = ts::random_ore(rng, amb, d, 2, 2, 2);
      OreElement v = ts::random_ore(rng, amb, d, 2, 2, 2);
      OreElement w = ts::random_ore(rng, amb, d, 2, 2, 2);
      CHECK((u * v) * w == u * (v * w));
    }
  }
}

TEST_CASE("degree additivity in x (R is a domain)") {
  std::mt19937 rng(402);
  Ambient amb{1, 0};
  for (int i = 0; i < 30; ++i) {
    DerivationSpec d = ts::random_derivation(rng, 1, 0);
    OreElement u = ts::random_ore(rng, amb, d, 2, 2, 2);
    OreElement v = ts::random_ore(rng, amb, d, 2, 2, 2);
    if (u.is_zero() || v.is_zero()) continue;
    CHECK((u * v).deg_x() == u.deg_x() + v.deg_x());
  }
}

TEST_CASE("distributivity and compatibility checks") {
  std::mt19937 rng(403);
  Ambient amb{1, 0};
  DerivationSpec d = ts::random_derivation(rng, 1, 0);
  OreElement u = ts::random_ore(rng, amb, d, 2, 2, 2);
  OreElement v = ts::random_ore(rng, amb, d, 2, 2, 2);
  OreElement w = ts::random_ore(rng, amb, d, 2, 2, 2);
  CHECK(u * (v + w) == u * v + u * w);

  DerivationSpec other({Scalar::integer(7, 0)}, {Scalar::zero(0)});
  if (!(other == d)) {
    OreElement z = OreElement::one(amb, other);
    CHECK_THROWS_AS(u * z, Error);
  }
}

TEST_CASE("closed-form filtration dimensions of R") {
  CHECK(ore_dim_closed_form(1, 0) == 1);
  CHECK(ore_dim_closed_form(1, 2) == 9);
  CHECK(ore_dim_closed_form(2, 1) == 6);
  for (int m = 0; m <= 6; ++m)
    CHECK(ore_dim_closed_form(1, m) == static_cast<std::int64_t>(m + 1) * (m + 1));
}

TEST_CASE("oracle matches the closed form (McConnell, n = 1)") {
  Ambient amb{1, 1};
  DerivationSpec d = DerivationSpec::mcconnell_generic(1);
  auto dims = oracle_dim_sequence(amb, d, 4);
  REQUIRE(dims.size() == 5);
  for (int m = 0; m <= 4; ++m) CHECK(dims[m] == ore_dim_closed_form(1, m));

  WordBasisReport rep = ore_dim_oracle(amb, d, 2);
  CHECK(rep.dim == 9);
  CHECK(rep.m == 2);
}

TEST_CASE("oracle matches the closed form (beta != 0 over Q, n = 1)") {
  Ambient amb{1, 0};
  DerivationSpec d({Scalar::integer(3, 0)}, {Scalar::integer(2, 0)});
  auto dims = oracle_dim_sequence(amb, d, 4);
  for (int m = 0; m <= 4; ++m) CHECK(dims[m] == ore_dim_closed_form(1, m));
}

TEST_CASE("oracle matches the closed form up to n = 2, m = 5") {
  // McConnell shape with generic lambda, and an affine shape with beta != 0.
  for (int n = 1; n <= 2; ++n) {
    Ambient generic_amb{static_cast<std::int32_t>(n), static_cast<std::int32_t>(n)};
    auto generic = oracle_dim_sequence(generic_amb, DerivationSpec::mcconnell_generic(n), 5);

    Ambient q_amb{static_cast<std::int32_t>(n), 0};
    std::vector<Scalar> alpha, beta;
    for (int i = 0; i < n; ++i) {
      alpha.push_back(Scalar::integer(i + 1, 0));
      beta.push_back(Scalar::integer(1, 0));
    }
    auto affine = oracle_dim_sequence(q_amb, DerivationSpec(alpha, beta), 5);

    for (int m = 0; m <= 5; ++m) {
      CHECK(generic[m] == ore_dim_closed_form(n, m));
      CHECK(affine[m] == ore_dim_closed_form(n, m));
    }
  }
}

TEST_CASE("oracle witness spans exactly the reported dimension") {
  Ambient amb{1, 0};
  DerivationSpec d({Scalar::integer(1, 0)}, {Scalar::integer(1, 0)});
  WordBasisReport rep = ore_dim_oracle(amb, d, 3);
  CHECK(rep.dim == static_cast<std::int64_t>(rep.basis_rank_witness.size()));
  OreBasis basis(amb, 3);
  EchelonBasis echelon(0);
  for (const OreElement& w : rep.basis_rank_witness) CHECK(echelon.insert(basis.to_vec(w)));
  CHECK(echelon.rank() == rep.dim);
}

TEST_CASE("oracle dims do not depend on the execution policy") {
  Ambient amb{2, 0};
  DerivationSpec d({Scalar::integer(1, 0), Scalar::integer(2, 0)},
                   {Scalar::integer(1, 0), Scalar::integer(1, 0)});
  OracleOptions serial{10'000'000, Exec::Serial};
  OracleOptions parallel{10'000'000, Exec::Parallel};
  CHECK(oracle_dim_sequence(amb, d, 3, serial) == oracle_dim_sequence(amb, d, 3, parallel));
}

TEST_CASE("oracle respects the step cap") {
  Ambient amb{2, 0};
  DerivationSpec d = DerivationSpec::zero(2, 0);
  OracleOptions opts;
  opts.step_cap = 10;
  try {
    ore_dim_oracle(amb, d, 4, opts);
    FAIL("expected ResourceLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
}

TEST_CASE("negative Ore powers are rejected") {
  Ambient amb{1, 0};
  DerivationSpec d = DerivationSpec::zero(1, 0);
  CHECK_THROWS_AS(OreElement::x_power(amb, d, -1), Error);
}

}  // TEST_SUITE
