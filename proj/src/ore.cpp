// SPDX-License-Identifier: Apache-2.0
#include "gkdim/ore.hpp"

#include <algorithm>

#include "gkdim/basis.hpp"
#include "omp_util.hpp"

namespace gkdim {

OreElement OreElement::one(Ambient amb, const DerivationSpec& der) {
  return from_laurent(LaurentPoly::one(amb), der);
}

OreElement OreElement::from_laurent(const LaurentPoly& a, const DerivationSpec& der) {
  OreElement u(a.ambient(), der);
  u.add_term(0, a);
  return u;
}

OreElement OreElement::x_power(Ambient amb, const DerivationSpec& der, int k) {
  if (k < 0) throw Error(ErrorKind::NegativeOrePower, "x is not invertible in K_n[x, delta]");
  OreElement u(amb, der);
  u.add_term(k, LaurentPoly::one(amb));
  return u;
}

OreElement OreElement::monomial(Ambient amb, const DerivationSpec& der, const Expvec& a,
                                int j, const Scalar& c) {
  if (j < 0) throw Error(ErrorKind::NegativeOrePower, "x is not invertible in K_n[x, delta]");
  OreElement u(amb, der);
  u.add_term(j, LaurentPoly::monomial(amb, a, c));
  return u;
}

LaurentPoly OreElement::coeff(int i) const {
  if (i < 0) throw Error(ErrorKind::IndexOutOfRange, "negative x power");
  if (i >= static_cast<int>(coeffs_.size())) return LaurentPoly::zero(amb_);
  return coeffs_[i];
}

std::int64_t OreElement::level() const {
  std::int64_t lvl = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero())
      lvl = std::max(lvl, coeffs_[i].level() + static_cast<std::int64_t>(i));
  return lvl;
}

void OreElement::add_term(int i, const LaurentPoly& a) {
  if (i < 0) throw Error(ErrorKind::IndexOutOfRange, "negative x power");
  if (!(a.ambient() == amb_))
    throw Error(ErrorKind::AmbientMismatch, "coefficient ambient mismatch");
  if (a.is_zero()) return;
  if (i >= static_cast<int>(coeffs_.size())) coeffs_.resize(i + 1, LaurentPoly::zero(amb_));
  coeffs_[i] += a;
  trim();
}

void OreElement::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void OreElement::check_compatible(const OreElement& o) const {
  if (!(amb_ == o.amb_))
    throw Error(ErrorKind::AmbientMismatch,
                "ambients differ: " + amb_.to_string() + " vs " + o.amb_.to_string());
  if (!(der_ == o.der_))
    throw Error(ErrorKind::DerivationMismatch, "derivations differ");
}

OreElement OreElement::operator-() const {
  OreElement r(amb_, der_);
  r.coeffs_.reserve(coeffs_.size());
  for (const LaurentPoly& a : coeffs_) r.coeffs_.push_back(-a);
  return r;
}

OreElement& OreElement::operator+=(const OreElement& o) {
  check_compatible(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), LaurentPoly::zero(amb_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

OreElement& OreElement::operator-=(const OreElement& o) {
  check_compatible(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), LaurentPoly::zero(amb_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

OreElement operator*(const OreElement& u, const OreElement& v) {
  u.check_compatible(v);
  const Ambient amb = u.amb_;
  OreElement r(amb, u.der_);
  const int du = u.deg_x();
  if (du < 0 || v.is_zero()) return r;

  for (int j = 0; j <= v.deg_x(); ++j) {
    const LaurentPoly& b = v.coeffs_[j];
    if (b.is_zero()) continue;
    // delta^l(b) for l <= deg_x(u), shared across the u-coefficients.
    std::vector<LaurentPoly> derivs{b};
    derivs.reserve(du + 1);
    for (int l = 1; l <= du; ++l) derivs.push_back(apply_derivation(u.der_, derivs.back()));

    for (int i = 0; i <= du; ++i) {
      const LaurentPoly& a = u.coeffs_[i];
      if (a.is_zero()) continue;
      // x^i * b = sum_l C(i,l) delta^l(b) x^{i-l}.
      for (int l = 0; l <= i; ++l) {
        if (derivs[l].is_zero()) continue;
        Scalar c = Scalar::from_rational(binomial(i, l), amb.trans);
        r.add_term(i - l + j, (a * derivs[l]).scaled(c));
      }
    }
  }
  return r;
}

OreElement ore_mul(const OreElement& u, const OreElement& v) { return u * v; }

OreElement OreElement::scaled(const Scalar& c) const {
  OreElement r(amb_, der_);
  if (c.is_zero()) return r;
  r.coeffs_.reserve(coeffs_.size());
  for (const LaurentPoly& a : coeffs_) r.coeffs_.push_back(a.scaled(c));
  r.trim();
  return r;
}

bool operator==(const OreElement& a, const OreElement& b) {
  return a.amb_ == b.amb_ && a.der_ == b.der_ && a.coeffs_ == b.coeffs_;
}

std::string OreElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = deg_x(); i >= 0; --i) {
    const LaurentPoly& a = coeffs_[i];
    if (a.is_zero()) continue;
    std::string xpart;
    if (i == 1) xpart = "x";
    else if (i > 1) xpart = "x^" + std::to_string(i);

    std::string apart;
    if (i > 0 && a == LaurentPoly::one(amb_)) {
      apart = "";
    } else {
      apart = a.to_string();
      if (i > 0 && a.term_count() > 1) apart = "(" + apart + ")";
    }

    std::string body = apart;
    if (!xpart.empty()) {
      if (!body.empty()) body += "*";
      body += xpart;
    }
    if (!out.empty()) out += " + ";
    out += body;
  }
  return out;
}

std::int64_t ore_dim_closed_form(int n, int m) {
  if (m < 0) throw Error(ErrorKind::Input, "ore_dim_closed_form requires m >= 0");
  std::int64_t total = 0;
  for (int i = 0; i <= m; ++i) total += filtration_dim_K(n, m - i);
  return total;
}

namespace {

std::vector<OreElement> oracle_generators(Ambient amb, const DerivationSpec& der) {
  std::vector<OreElement> gens;
  for (int i = 0; i < amb.nvars; ++i) {
    gens.push_back(OreElement::from_laurent(LaurentPoly::variable(amb, i, 1), der));
    gens.push_back(OreElement::from_laurent(LaurentPoly::variable(amb, i, -1), der));
  }
  gens.push_back(OreElement::x_power(amb, der, 1));
  return gens;
}

struct OracleRun {
  std::vector<std::int64_t> dims;
  std::vector<OreElement> witness;
};

OracleRun run_oracle(Ambient amb, const DerivationSpec& der, int m_max,
                     const OracleOptions& opts) {
  if (m_max < 0) throw Error(ErrorKind::Input, "oracle requires m >= 0");
  const OreBasis basis(amb, m_max);
  const std::vector<OreElement> gens = oracle_generators(amb, der);
  const std::int64_t g = static_cast<std::int64_t>(gens.size());

  OracleRun run;
  EchelonBasis echelon(amb.trans);

  std::vector<OreElement> level{OreElement::one(amb, der)};
  if (echelon.insert(basis.to_vec(level.front()))) run.witness.push_back(level.front());
  run.dims.push_back(echelon.rank());

  std::int64_t steps = 0;
  for (int l = 1; l <= m_max; ++l) {
    const std::int64_t prev_count = static_cast<std::int64_t>(level.size());
    steps += prev_count * g;
    if (steps > opts.step_cap)
      throw Error(ErrorKind::ResourceLimit,
                  "oracle word enumeration exceeds step cap " + std::to_string(opts.step_cap));

    // Words of length l in lexicographic order: prefix-major, generator-minor.
    std::vector<OreElement> cur(level.size() * gens.size(), OreElement::zero(amb, der));
    detail::omp_for(prev_count * g, opts.policy,
                    [&](std::int64_t idx) { cur[idx] = level[idx / g] * gens[idx % g]; });

    for (const OreElement& w : cur)
      if (echelon.insert(basis.to_vec(w))) run.witness.push_back(w);
    run.dims.push_back(echelon.rank());
    level = std::move(cur);
  }
  return run;
}

}  // namespace

WordBasisReport ore_dim_oracle(Ambient amb, const DerivationSpec& der, int m,
                               const OracleOptions& opts) {
  OracleRun run = run_oracle(amb, der, m, opts);
  WordBasisReport report;
  report.m = m;
  report.dim = run.dims.back();
  report.basis_rank_witness = std::move(run.witness);
  return report;
}

std::vector<std::int64_t> oracle_dim_sequence(Ambient amb, const DerivationSpec& der,
                                              int m_max, const OracleOptions& opts) {
  return run_oracle(amb, der, m_max, opts).dims;
}

}  // namespace gkdim
