// SPDX-License-Identifier: Apache-2.0
#include "gkdim/laurent.hpp"

#include <algorithm>
#include <cstdlib>

namespace gkdim {

std::int64_t l1_norm(const Expvec& e) {
  std::int64_t s = 0;
  for (std::int32_t x : e) s += std::abs(static_cast<std::int64_t>(x));
  return s;
}

bool grlex_abs_less(const Expvec& a, const Expvec& b) {
  std::int64_t na = l1_norm(a), nb = l1_norm(b);
  if (na != nb) return na < nb;
  return a < b;
}

Expvec exp_add(const Expvec& a, const Expvec& b) {
  Expvec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(a[i]) + b[i];
    if (s < INT32_MIN || s > INT32_MAX)
      throw Error(ErrorKind::Overflow, "exponent overflow");
    r[i] = static_cast<std::int32_t>(s);
  }
  return r;
}

LaurentPoly LaurentPoly::constant(Ambient amb, const Scalar& c) {
  LaurentPoly p(amb);
  p.add_term(Expvec(amb.nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Ambient amb, const Expvec& e, const Scalar& c) {
  if (static_cast<std::int32_t>(e.size()) != amb.nvars)
    throw Error(ErrorKind::AmbientMismatch, "exponent vector length != nvars");
  LaurentPoly p(amb);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(Ambient amb, int i, std::int32_t exp) {
  if (i < 0 || i >= amb.nvars)
    throw Error(ErrorKind::IndexOutOfRange, "x index out of range");
  Expvec e(amb.nvars, 0);
  e[i] = exp;
  return monomial(amb, e, Scalar::one(amb.trans));
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && l1_norm(terms_.begin()->first) == 0);
}

Scalar LaurentPoly::constant_value() const {
  auto it = terms_.find(Expvec(amb_.nvars, 0));
  if (it == terms_.end()) return Scalar::zero(amb_.trans);
  return it->second;
}

void LaurentPoly::add_term(const Expvec& e, const Scalar& c) {
  if (static_cast<std::int32_t>(e.size()) != amb_.nvars)
    throw Error(ErrorKind::AmbientMismatch, "exponent vector length != nvars");
  if (c.field() != amb_.trans)
    throw Error(ErrorKind::FieldMismatch, "coefficient field != ambient field");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::int64_t LaurentPoly::level() const {
  std::int64_t lvl = 0;
  for (const auto& [e, c] : terms_) lvl = std::max(lvl, l1_norm(e));
  return lvl;
}

void LaurentPoly::check_ambient(const LaurentPoly& o) const {
  if (!(amb_ == o.amb_))
    throw Error(ErrorKind::AmbientMismatch,
                "ambients differ: " + amb_.to_string() + " vs " + o.amb_.to_string());
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(amb_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_ambient(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_ambient(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_ambient(b);
  LaurentPoly r(a.amb_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
  LaurentPoly r(amb_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const Expvec& shift, const Scalar& c) const {
  LaurentPoly r(amb_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(exp_add(e, shift), v * c);
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw Error(ErrorKind::Input, "negative power of a Laurent polynomial");
  LaurentPoly r = one(amb_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Expvec*> keys;
  keys.reserve(terms_.size());
  for (const auto& [e, c] : terms_) keys.push_back(&e);
  std::sort(keys.begin(), keys.end(),
            [](const Expvec* a, const Expvec* b) { return grlex_abs_less(*b, *a); });

  std::string out;
  bool first = true;
  for (const Expvec* e : keys) {
    const Scalar& c = terms_.at(*e);
    std::string mono;
    for (std::int32_t i = 0; i < amb_.nvars; ++i) {
      if ((*e)[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if ((*e)[i] != 1) mono += "^" + std::to_string((*e)[i]);
    }

    // Plain rational values carry their sign into the join; anything with
    // visible structure is parenthesized instead.
    bool neg = false;
    std::string coeff;
    if (std::optional<Rational> q = c.as_constant_rational()) {
      neg = q->sign() < 0;
      Rational mag = q->abs();
      if (!mag.is_one() || mono.empty()) coeff = mag.to_string();
    } else {
      coeff = c.needs_parens() ? "(" + c.to_string() + ")" : c.to_string();
    }

    std::string body = coeff;
    if (!mono.empty()) {
      if (!coeff.empty()) body += "*";
      body += mono;
    }

    if (first) {
      out += neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " + body : " + " + body;
    }
  }
  return out;
}

DerivationSpec::DerivationSpec(std::vector<Scalar> a, std::vector<Scalar> b)
    : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.size() != beta.size())
    throw Error(ErrorKind::Input, "alpha/beta length mismatch");
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i].field() != field() || beta[i].field() != field())
      throw Error(ErrorKind::FieldMismatch, "derivation coefficients from mixed fields");
}

bool DerivationSpec::is_mcconnell() const {
  return std::all_of(beta.begin(), beta.end(), [](const Scalar& b) { return b.is_zero(); });
}

DerivationSpec DerivationSpec::zero(int n, int trans) {
  return DerivationSpec(std::vector<Scalar>(n, Scalar::zero(trans)),
                        std::vector<Scalar>(n, Scalar::zero(trans)));
}

DerivationSpec DerivationSpec::mcconnell_generic(int n) {
  std::vector<Scalar> a, b;
  for (int i = 0; i < n; ++i) {
    a.push_back(Scalar::transcendental(i, n));
    b.push_back(Scalar::zero(n));
  }
  return DerivationSpec(std::move(a), std::move(b));
}

LaurentPoly partial_derivative(const LaurentPoly& f, int i) {
  const Ambient& amb = f.ambient();
  if (i < 0 || i >= amb.nvars)
    throw Error(ErrorKind::IndexOutOfRange, "partial derivative index out of range");
  LaurentPoly r(amb);
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    Expvec e2 = e;
    e2[i] -= 1;
    r.add_term(e2, c * Scalar::integer(e[i], amb.trans));
  }
  return r;
}

LaurentPoly apply_derivation(const DerivationSpec& d, const LaurentPoly& f) {
  const Ambient& amb = f.ambient();
  if (d.nvars() != amb.nvars)
    throw Error(ErrorKind::AmbientMismatch, "derivation has wrong number of variables");
  if (d.field() != amb.trans)
    throw Error(ErrorKind::FieldMismatch, "derivation field != ambient field");
  LaurentPoly r(amb);
  for (int i = 0; i < amb.nvars; ++i) {
    if (d.alpha[i].is_zero() && d.beta[i].is_zero()) continue;
    // (alpha_i x_i + beta_i) * df/dx_i, expanded termwise.
    for (const auto& [e, c] : f.terms()) {
      if (e[i] == 0) continue;
      Scalar ai = c * Scalar::integer(e[i], amb.trans);
      if (!d.alpha[i].is_zero()) r.add_term(e, ai * d.alpha[i]);
      if (!d.beta[i].is_zero()) {
        Expvec e2 = e;
        e2[i] -= 1;
        r.add_term(e2, ai * d.beta[i]);
      }
    }
  }
  return r;
}

std::int64_t filtration_dim_K(int n, int m) {
  if (n < 1) throw Error(ErrorKind::Input, "filtration_dim_K requires n >= 1");
  if (m < 0) throw Error(ErrorKind::Input, "filtration_dim_K requires m >= 0");
  // #{a : sum |a_i| <= m} = sum_k 2^k C(n,k) C(m,k), choosing the k nonzero
  // coordinates, their signs, and a composition of the norm budget.
  mpz_class total = 0;
  for (int k = 0; k <= std::min(n, m); ++k) {
    mpz_class cnk, cmk;
    mpz_bin_uiui(cnk.get_mpz_t(), n, k);
    mpz_bin_uiui(cmk.get_mpz_t(), m, k);
    mpz_class term = cnk * cmk;
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), k);
    total += term;
  }
  if (!total.fits_slong_p())
    throw Error(ErrorKind::Overflow, "filtration dimension exceeds 64 bits");
  return total.get_si();
}

namespace {
void enumerate_ball(int n, int m, int pos, Expvec& cur, std::vector<Expvec>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  for (int v = -m; v <= m; ++v) {
    cur[pos] = v;
    enumerate_ball(n, m - std::abs(v), pos + 1, cur, out);
  }
  cur[pos] = 0;
}
}  // namespace

std::vector<Expvec> l1_ball_basis(int n, int m) {
  std::vector<Expvec> out;
  out.reserve(static_cast<std::size_t>(filtration_dim_K(n, std::max(m, 0))));
  Expvec cur(n, 0);
  enumerate_ball(n, m, 0, cur, out);
  std::sort(out.begin(), out.end(), grlex_abs_less);
  return out;
}

}  // namespace gkdim
