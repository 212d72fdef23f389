// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "gkdim/modpres.hpp"
#include "support.hpp"

using namespace gkdim;
namespace ts = gkdim::testsupport;

namespace {
LaurentPoly xv(Ambient amb, int i, int e = 1) { return LaurentPoly::variable(amb, i, e); }
LaurentPoly lone(Ambient amb) { return LaurentPoly::one(amb); }
}  // namespace

TEST_SUITE("modpres") {

TEST_CASE("free R over itself grows like the closed form") {
  Ambient amb{1, 1};
  ModulePresentation p = ModulePresentation::free_R(amb, DerivationSpec::mcconnell_generic(1));
  DimensionSequence seq = module_filtration_dims(p, 6);
  for (int m = 0; m <= 6; ++m) CHECK(seq.dims[m] == (m + 1) * static_cast<std::int64_t>(m + 1));
}

TEST_CASE("K_1/(x1 - 1) is one-dimensional at every level") {
  Ambient amb{1, 0};
  ModulePresentation p = ModulePresentation::over_K(amb, {xv(amb, 0) - lone(amb)});
  DimensionSequence seq = module_filtration_dims(p, 6);
  CHECK(seq.dims == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("relation 1 presents the zero module") {
  Ambient amb{2, 0};
  ModulePresentation p = ModulePresentation::over_K(amb, {lone(amb)});
  DimensionSequence seq = module_filtration_dims(p, 4);
  CHECK(seq.dims == std::vector<std::int64_t>{0, 0, 0, 0, 0});
}

TEST_CASE("incremental, reference, and parallel paths agree") {
  std::mt19937 rng(601);
  Ambient amb{2, 0};
  for (int iter = 0; iter < 6; ++iter) {
    std::vector<LaurentPoly> rels{ts::random_laurent(rng, amb, 3, 1, /*allow_zero=*/false)};
    ModulePresentation p = ModulePresentation::over_K(amb, rels);
    DimsOptions serial;
    serial.policy = Exec::Serial;
    DimsOptions parallel;
    parallel.policy = Exec::Parallel;
    DimensionSequence a = module_filtration_dims(p, 5, serial);
    DimensionSequence b = module_filtration_dims(p, 5, parallel);
    DimensionSequence c = module_filtration_dims_reference(p, 5);
    CHECK(a.dims == b.dims);
    CHECK(a.dims == c.dims);
  }
}

TEST_CASE("module dims are monotone and bounded by the algebra dims") {
  Ambient amb{2, 0};
  std::vector<ModulePresentation> corpus{
      ModulePresentation::over_K(amb, {xv(amb, 0) - lone(amb)}),
      ModulePresentation::over_K(amb, {xv(amb, 0) * xv(amb, 1) - lone(amb)}),
      ModulePresentation::over_K(amb, {xv(amb, 0) - xv(amb, 1)}),
      ModulePresentation::over_K(amb, {xv(amb, 0, 2) - lone(amb)}),
  };
  for (const auto& p : corpus) {
    DimensionSequence seq = module_filtration_dims(p, 7);
    for (int m = 0; m <= 7; ++m) {
      CHECK(seq.dims[m] <= p.algebra_dim(m));
      if (m > 0) CHECK(seq.dims[m - 1] <= seq.dims[m]);
    }
  }
}

TEST_CASE("induced dims are cumulative base dims") {
  Ambient amb{1, 1};
  DerivationSpec d = DerivationSpec::mcconnell_generic(1);

  // Free base K_1: induced dims equal dim R_m = (m+1)^2.
  InducedModule free_ind = induce(ModulePresentation::free_K(amb), d);
  DimensionSequence free_dims = induced_filtration_dims(free_ind, 6);
  for (int m = 0; m <= 6; ++m)
    CHECK(free_dims.dims[m] == ore_dim_closed_form(1, m));

  // K_1/(x1 - 1): induced dims m + 1, growth degree 1.
  ModulePresentation q = ModulePresentation::over_K(amb, {xv(amb, 0) - lone(amb)});
  DimensionSequence ind = induced_filtration_dims(induce(q, d), 8);
  for (int m = 0; m <= 8; ++m) CHECK(ind.dims[m] == m + 1);
  GrowthReport r = gk_estimate(ind);
  REQUIRE(r.stable());
  CHECK(*r.degree == 1);

  // Zero base module induces the zero module.
  ModulePresentation z = ModulePresentation::over_K(amb, {lone(amb)});
  CHECK(induced_filtration_dims(induce(z, d), 4).dims ==
        std::vector<std::int64_t>{0, 0, 0, 0, 0});
}

TEST_CASE("induced module of a cyclic quotient matches the R-presentation") {
  // N (x)_K R = R/(I R) for cyclic N = K/I: both dimension routes agree.
  Ambient amb{1, 1};
  DerivationSpec d = DerivationSpec::mcconnell_generic(1);
  LaurentPoly rel = xv(amb, 0) - lone(amb);

  DimensionSequence via_induce =
      induced_filtration_dims(induce(ModulePresentation::over_K(amb, {rel}), d), 6);
  ModulePresentation rp =
      ModulePresentation::over_R(amb, d, {OreElement::from_laurent(rel, d)});
  DimensionSequence via_r = module_filtration_dims(rp, 6);
  CHECK(via_induce.dims == via_r.dims);
}

TEST_CASE("coset reduction and right action") {
  Ambient amb{1, 0};
  ModulePresentation p = ModulePresentation::over_K(amb, {xv(amb, 0) - lone(amb)});

  // coset(x1^3) * x1^-1 = coset(1)
  LaurentPoly got = coset_act(p, xv(amb, 0, 3), xv(amb, 0, -1));
  CHECK(got == lone(amb));

  // coset(v) * 1 = coset(v)
  std::mt19937 rng(602);
  LaurentPoly v = ts::random_laurent(rng, amb, 3, 2);
  CHECK(coset_act(p, v, lone(amb)) == coset_reduce(p, v));

  // In R/(x)R the generator is annihilated by x.
  Ambient amb2{1, 1};
  DerivationSpec d = DerivationSpec::mcconnell_generic(1);
  ModulePresentation rp =
      ModulePresentation::over_R(amb2, d, {OreElement::x_power(amb2, d, 1)});
  OreElement acted = coset_act(rp, OreElement::one(amb2, d), OreElement::x_power(amb2, d, 1));
  CHECK(acted.is_zero());
}

TEST_CASE("coset action is associative where the relation span is exact") {
  std::mt19937 rng(605);
  Ambient amb{2, 0};
  ModulePresentation p = ModulePresentation::over_K(amb, {xv(amb, 0) - lone(amb)});
  for (int iter = 0; iter < 12; ++iter) {
    LaurentPoly v = ts::random_laurent(rng, amb, 2, 1);
    LaurentPoly r = ts::random_laurent(rng, amb, 2, 1);
    LaurentPoly s = ts::random_laurent(rng, amb, 2, 1);
    CHECK(coset_act(p, coset_act(p, v, r), s) == coset_act(p, v, r * s));
  }

  Ambient ambr{1, 0};
  DerivationSpec d({Scalar::integer(2, 0)}, {Scalar::zero(0)});
  ModulePresentation rp = ModulePresentation::over_R(
      ambr, d,
      {OreElement::from_laurent(LaurentPoly::variable(ambr, 0) - LaurentPoly::one(ambr), d)});
  for (int iter = 0; iter < 8; ++iter) {
    OreElement v = ts::random_ore(rng, ambr, d, 1, 2, 1);
    OreElement r = ts::random_ore(rng, ambr, d, 1, 2, 1);
    OreElement s = ts::random_ore(rng, ambr, d, 1, 2, 1);
    CHECK(coset_act(rp, coset_act(rp, v, r), s) == coset_act(rp, v, r * s));
  }
}

TEST_CASE("induced action obeys the module law over a free base") {
  std::mt19937 rng(603);
  Ambient amb{1, 0};
  for (int iter = 0; iter < 20; ++iter) {
    DerivationSpec d = ts::random_derivation(rng, 1, 0);
    InducedModule im = induce(ModulePresentation::free_K(amb), d);
    InducedElement e;
    e.comps = {ts::random_laurent(rng, amb, 2, 1)};

    OreElement r = ts::random_ore(rng, amb, d, 2, 2, 1);
    OreElement s = ts::random_ore(rng, amb, d, 2, 2, 1);
    InducedElement lhs = induced_act(im, induced_act(im, e, r), s);
    InducedElement rhs = induced_act(im, e, r * s);
    CHECK(lhs.comps == rhs.comps);
  }
}

TEST_CASE("induced action of 1 (x) 1 reproduces normal forms") {
  std::mt19937 rng(604);
  Ambient amb{1, 0};
  DerivationSpec d = ts::random_derivation(rng, 1, 0);
  InducedModule im = induce(ModulePresentation::free_K(amb), d);
  for (int iter = 0; iter < 15; ++iter) {
    OreElement r = ts::random_ore(rng, amb, d, 3, 2, 2);
    InducedElement e;
    e.comps = {LaurentPoly::one(amb)};
    InducedElement acted = induced_act(im, e, r);
    OreElement rebuilt(amb, d);
    for (std::size_t i = 0; i < acted.comps.size(); ++i)
      rebuilt.add_term(static_cast<int>(i), acted.comps[i]);
    CHECK(rebuilt == r);
  }
}

TEST_CASE("submodule and quotient degrees satisfy exactness samples") {
  Ambient amb{2, 0};
  // M = K_2, N = (x1 - 1) K_2, M/N = K_2/(x1 - 1): degrees 2, 2, 1.
  ModulePresentation m_free = ModulePresentation::free_K(amb);
  LaurentPoly c = xv(amb, 0) - lone(amb);

  DimensionSequence n_dims = submodule_filtration_dims(m_free, c, 8);
  GrowthReport n_rep = gk_estimate(n_dims);
  REQUIRE(n_rep.stable());
  CHECK(*n_rep.degree == 2);

  DimensionSequence q_dims =
      module_filtration_dims(ModulePresentation::over_K(amb, {c}), 8);
  GrowthReport q_rep = gk_estimate(q_dims);
  REQUIRE(q_rep.stable());
  CHECK(*q_rep.degree == 1);
}

TEST_CASE("restriction to a variable subset never increases the degree") {
  Ambient amb{2, 0};
  ModulePresentation p = ModulePresentation::over_K(amb, {xv(amb, 0) - lone(amb)});
  DimensionSequence full = module_filtration_dims(p, 8);
  GrowthReport full_rep = gk_estimate(full);
  REQUIRE(full_rep.stable());

  for (std::vector<int> subset : {std::vector<int>{0}, std::vector<int>{1}}) {
    DimensionSequence restricted = restricted_filtration_dims(p, subset, 8);
    GrowthReport rep = gk_estimate(restricted);
    REQUIRE(rep.stable());
    CHECK(*rep.degree <= *full_rep.degree);
  }
  // Restriction to {x2} is free of rank 1: dims equal the K_1 ball count.
  DimensionSequence r2 = restricted_filtration_dims(p, {1}, 6);
  for (int m = 0; m <= 6; ++m) CHECK(r2.dims[m] == filtration_dim_K(1, m));
}

TEST_CASE("finite-group quotient stabilizes to the group order") {
  // x1^2 x2 = 1 and x2^3 = 1 cut out a finite abelian group of order 6; the
  // early levels overestimate (and even dip) before the tail locks onto 6.
  Ambient amb{2, 0};
  ModulePresentation p = ModulePresentation::over_K(
      amb, {LaurentPoly::monomial(amb, {2, 1}, Scalar::one(0)) - lone(amb),
            LaurentPoly::monomial(amb, {0, 3}, Scalar::one(0)) - lone(amb)});
  DimensionSequence seq = module_filtration_dims(p, 8);
  for (int m = 4; m <= 8; ++m) CHECK(seq.dims[m] == 6);
  GrowthReport rep = gk_estimate(seq);
  REQUIRE(rep.stable());
  CHECK(*rep.degree == 0);
}

TEST_CASE("resource caps fail loudly") {
  Ambient amb{3, 0};
  DimsOptions opts;
  opts.max_columns = 10;
  try {
    module_filtration_dims(ModulePresentation::over_K(amb, {xv(amb, 0)}), 6, opts);
    FAIL("expected ResourceLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
}

}  // TEST_SUITE
