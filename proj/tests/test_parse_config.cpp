// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gkdim/config.hpp"
#include "gkdim/parse.hpp"
#include "gkdim/report.hpp"
#include "support.hpp"

using namespace gkdim;
namespace ts = gkdim::testsupport;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& content) {
  fs::path dir = fs::temp_directory_path() / "gkdim_test_cfg";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream out(p);
  out << content;
  return p;
}

}  // namespace

TEST_SUITE("parse") {

TEST_CASE("laurent expressions parse and normalize") {
  Ambient amb{2, 1};
  ParseContext ctx = ParseContext::for_K(amb);

  LaurentPoly p = parse_laurent("x1^-2 + (t1)*x2", ctx);
  CHECK(p.term_count() == 2);
  LaurentPoly want = LaurentPoly::variable(amb, 0, -2) +
                     LaurentPoly::variable(amb, 1).scaled(Scalar::transcendental(0, 1));
  CHECK(p == want);

  CHECK(parse_laurent("(1/2)*x1 - x2^3", ctx) ==
        LaurentPoly::variable(amb, 0).scaled(Scalar::from_rational(Rational(1, 2), 1)) -
            LaurentPoly::variable(amb, 1, 3));
}

TEST_CASE("ore expressions normalize products through the commutation rule") {
  Ambient amb{1, 1};
  DerivationSpec d = DerivationSpec::mcconnell_generic(1);
  ParseContext ctx = ParseContext::for_R(amb, d);

  OreElement got = parse_element("x*x1", ctx);
  OreElement want(amb, d);
  want.add_term(1, LaurentPoly::variable(amb, 0));
  want.add_term(0, LaurentPoly::variable(amb, 0).scaled(Scalar::transcendental(0, 1)));
  CHECK(got == want);
}

TEST_CASE("scalar literal grammar") {
  Scalar s = parse_scalar("(t1 + 2)/(3*t2)", 2);
  Scalar t1 = Scalar::transcendental(0, 2);
  Scalar t2 = Scalar::transcendental(1, 2);
  CHECK(s == (t1 + Scalar::integer(2, 2)) / (Scalar::integer(3, 2) * t2));
  CHECK(parse_scalar("5/6", 0) == Scalar::from_rational(Rational(5, 6), 0));
  CHECK(parse_scalar("-2", 0) == Scalar::integer(-2, 0));
}

TEST_CASE("errors carry positions and kinds") {
  Ambient amb{2, 0};
  ParseContext kctx = ParseContext::for_K(amb);

  CHECK_THROWS_AS(parse_laurent("x3 + 1", kctx), SyntaxError);
  CHECK_THROWS_AS(parse_laurent("x1 +", kctx), SyntaxError);
  CHECK_THROWS_AS(parse_laurent("(x1 + 1)^2", kctx), SyntaxError);
  CHECK_THROWS_AS(parse_laurent("x1/x2", kctx), SyntaxError);
  CHECK_THROWS_AS(parse_laurent("x * x1", kctx), SyntaxError);  // no Ore var over K

  try {
    parse_laurent("x1 + \n  x2 $", kctx);
    FAIL("expected syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 6);
  }

  DerivationSpec d = DerivationSpec::zero(2, 0);
  ParseContext rctx = ParseContext::for_R(amb, d);
  try {
    parse_element("x^-1", rctx);
    FAIL("expected NegativeOrePower");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeOrePower);
  }
}

TEST_CASE("print/parse round trip on randomized elements") {
  std::mt19937 rng(801);
  for (int trans : {0, 2}) {
    Ambient amb{2, static_cast<std::int32_t>(trans)};
    ParseContext kctx = ParseContext::for_K(amb);
    for (int i = 0; i < 30; ++i) {
      LaurentPoly f = ts::random_laurent(rng, amb, 4, 3);
      CHECK(parse_laurent(f.to_string(), kctx) == f);
    }
    DerivationSpec d = ts::random_derivation(rng, 2, trans);
    ParseContext rctx = ParseContext::for_R(amb, d);
    for (int i = 0; i < 30; ++i) {
      OreElement u = ts::random_ore(rng, amb, d, 3, 3, 2);
      CHECK(parse_element(u.to_string(), rctx) == u);
    }
  }
}

}  // TEST_SUITE

TEST_SUITE("config") {

TEST_CASE("algebra config round trip") {
  fs::path p = write_temp("alg.cfg",
                          "# generic McConnell algebra\n"
                          "field = rational_functions(2)\n"
                          "n = 2\n"
                          "alpha = [\"t1\", \"t2\"]\n"
                          "beta = [\"0\", \"0\"]\n");
  AlgebraConfig cfg = load_algebra_config(p.string());
  CHECK(cfg.trans == 2);
  CHECK(cfg.n == 2);
  CHECK(cfg.der == DerivationSpec::mcconnell_generic(2));
}

TEST_CASE("module files over K and R") {
  fs::path alg = write_temp("alg_q.cfg",
                            "field = rationals\n"
                            "n = 2\n"
                            "alpha = [\"1\", \"2\"]\n"
                            "beta = [\"0\", \"0\"]\n");
  AlgebraConfig cfg = load_algebra_config(alg.string());

  fs::path kmod = write_temp("k.mod",
                             "over = K\n"
                             "relations = [\n"
                             "  \"x1 - 1\",\n"
                             "  \"x2^2 - x1\",\n"
                             "]\n");
  ModulePresentation pk = load_module_presentation(kmod.string(), cfg);
  CHECK(pk.over == OverAlgebra::BaseK);
  CHECK(pk.k_relations.size() == 2);

  fs::path rmod = write_temp("r.mod", "over = R\nrelations = [\"x\"]\n");
  ModulePresentation pr = load_module_presentation(rmod.string(), cfg);
  CHECK(pr.over == OverAlgebra::OreR);
  CHECK(pr.r_relations.size() == 1);
  CHECK(pr.r_relations[0].deg_x() == 1);

  CHECK_THROWS_AS(load_ideal(rmod.string(), cfg), Error);
}

TEST_CASE("config errors are explicit") {
  AlgebraConfig dummy;
  fs::path bad_field = write_temp("bad1.cfg",
                                  "field = complex\nn = 1\nalpha = [\"1\"]\nbeta = [\"0\"]\n");
  CHECK_THROWS_AS(load_algebra_config(bad_field.string()), Error);

  fs::path bad_len = write_temp(
      "bad2.cfg", "field = rationals\nn = 2\nalpha = [\"1\"]\nbeta = [\"0\", \"0\"]\n");
  CHECK_THROWS_AS(load_algebra_config(bad_len.string()), Error);

  fs::path bad_syntax = write_temp("bad3.cfg", "field rationals\n");
  CHECK_THROWS_AS(load_algebra_config(bad_syntax.string()), Error);
  (void)dummy;
}

TEST_CASE("audit report CSV loader") {
  fs::path p = write_temp("reports.csv",
                          "id,degree,asserted_simple\n"
                          "m1,2,true\n"
                          "m2,unstable,false\n"
                          "m3,0,no\n");
  auto rows = load_audit_reports(p.string());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].degree == 2);
  CHECK(rows[0].asserted_simple);
  CHECK_FALSE(rows[1].degree.has_value());
  CHECK(rows[2].degree == 0);
}

TEST_CASE("report serializers are deterministic") {
  DimensionSequence seq;
  seq.dims = {1, 3, 5};
  seq.source = "s";
  CHECK(dims_to_csv(seq) == "m,dim\n0,1\n1,3\n2,5\n");

  std::vector<AuditRow> rows{{"m1", 2, AuditVerdict::CertifiedNotSimple, "dichotomy_gap"}};
  CHECK(audit_to_csv(rows) == "id,degree,verdict,justification\nm1,2,CertifiedNotSimple,dichotomy_gap\n");
}

}  // TEST_SUITE
