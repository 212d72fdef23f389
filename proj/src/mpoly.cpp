// SPDX-License-Identifier: Apache-2.0
#include "gkdim/mpoly.hpp"

#include <algorithm>
#include <numeric>

namespace gkdim {

bool grlex_less(const Expvec& a, const Expvec& b) {
  std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  if (da != db) return da < db;
  return a < b;
}

MPoly MPoly::constant(int nvars, const Rational& c) {
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Expvec(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars)
    throw Error(ErrorKind::IndexOutOfRange, "variable index out of range");
  MPoly p(nvars);
  Expvec e(nvars, 0);
  e[i] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Expvec& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
}

Rational MPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error(ErrorKind::Internal, "polynomial is not constant");
  return terms_.begin()->second;
}

void MPoly::add_term(const Expvec& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(a.nvars_);
  Expvec e(a.nvars_, 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::scaled(const Rational& c) const {
  MPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

MPoly MPoly::shifted(const Expvec& shift, const Rational& c) const {
  MPoly r(nvars_);
  if (c.is_zero()) return r;
  Expvec e(nvars_, 0);
  for (const auto& [ep, v] : terms_) {
    for (int i = 0; i < nvars_; ++i) e[i] = ep[i] + shift[i];
    r.terms_.emplace(e, v * c);
  }
  return r;
}

const Expvec& MPoly::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorKind::Internal, "leading monomial of zero");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (grlex_less(best->first, it->first)) best = it;
  return best->first;
}

Rational MPoly::leading_coeff() const { return terms_.at(leading_monomial()); }

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  std::int64_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::int64_t s = std::accumulate(e.begin(), e.end(), std::int64_t{0});
    d = std::max(d, s);
  }
  return static_cast<int>(d);
}

int MPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

std::string MPoly::to_string(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::vector<const Expvec*> keys;
  keys.reserve(terms_.size());
  for (const auto& [e, c] : terms_) keys.push_back(&e);
  std::sort(keys.begin(), keys.end(),
            [](const Expvec* a, const Expvec* b) { return grlex_less(*b, *a); });
  std::string out;
  bool first = true;
  for (const Expvec* e : keys) {
    const Rational& c = terms_.at(*e);
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if ((*e)[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_prefix + std::to_string(i + 1);
      if ((*e)[i] != 1) mono += "^" + std::to_string((*e)[i]);
    }
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

MPoly mpoly_canonical_associate(const MPoly& p) {
  if (p.is_zero()) return p;
  // Scale to integer-primitive: lcm of denominators over gcd of numerators.
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
  }
  Rational scale{mpq_class(den_lcm, num_gcd)};
  if (p.leading_coeff().sign() < 0) scale = -scale;
  return p.scaled(scale);
}

namespace {

int deg_in_var(const MPoly& p, int v) {
  int d = -1;
  for (const auto& [e, c] : p.terms()) d = std::max(d, static_cast<int>(e[v]));
  return d;
}

/// Coefficient of v^k, as a polynomial with the v-slot zeroed.
MPoly coeff_of(const MPoly& p, int v, int k) {
  MPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[v] != k) continue;
    Expvec e2 = e;
    e2[v] = 0;
    r.add_term(e2, c);
  }
  return r;
}

MPoly times_var_pow(const MPoly& p, int v, int k) {
  Expvec shift(p.nvars(), 0);
  shift[v] = k;
  return p.shifted(shift, Rational(1));
}

MPoly content_in_var(const MPoly& p, int v) {
  MPoly c(p.nvars());
  for (int k = 0; k <= deg_in_var(p, v); ++k) {
    MPoly ck = coeff_of(p, v, k);
    if (!ck.is_zero()) c = mpoly_gcd(c, ck);
  }
  return c;
}

/// Pseudo-remainder of a by b in the variable v (b nonzero in v).
MPoly pseudo_rem(MPoly r, const MPoly& b, int v) {
  const int db = deg_in_var(b, v);
  const MPoly lb = coeff_of(b, v, db);
  while (!r.is_zero()) {
    const int dr = deg_in_var(r, v);
    if (dr < db) break;
    const MPoly lr = coeff_of(r, v, dr);
    // r <- lb*r - lr*v^(dr-db)*b  cancels the leading v-term.
    r = lb * r - times_var_pow(lr, v, dr - db) * b;
  }
  return r;
}

}  // namespace

MPoly mpoly_exact_div(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  MPoly q(a.nvars());
  MPoly r = a;
  const Expvec& lb = b.leading_monomial();
  const Rational cb = b.leading_coeff();
  const int n = a.nvars();
  while (!r.is_zero()) {
    const Expvec& lr = r.leading_monomial();
    Expvec d(n);
    for (int i = 0; i < n; ++i) {
      d[i] = lr[i] - lb[i];
      if (d[i] < 0) throw Error(ErrorKind::Internal, "inexact polynomial division");
    }
    Rational cq = r.terms().at(lr) / cb;
    q.add_term(d, cq);
    r -= b.shifted(d, cq);
  }
  return q;
}

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return mpoly_canonical_associate(b);
  if (b.is_zero()) return mpoly_canonical_associate(a);
  if (a.is_constant() || b.is_constant())
    return MPoly::constant(a.nvars(), Rational(1));

  // Main variable: lowest index occurring in either operand.
  int v = -1;
  for (int i = 0; i < a.nvars() && v < 0; ++i)
    if (deg_in_var(a, i) > 0 || deg_in_var(b, i) > 0) v = i;
  if (v < 0) return MPoly::constant(a.nvars(), Rational(1));

  const int da = deg_in_var(a, v);
  const int db = deg_in_var(b, v);
  if (da == 0) return mpoly_gcd(content_in_var(b, v), a);
  if (db == 0) return mpoly_gcd(content_in_var(a, v), b);

  MPoly ca = content_in_var(a, v);
  MPoly cb = content_in_var(b, v);
  MPoly pa = mpoly_exact_div(a, ca);
  MPoly pb = mpoly_exact_div(b, cb);
  if (da < db) std::swap(pa, pb);

  // Primitive PRS in v.
  while (true) {
    MPoly rem = pseudo_rem(pa, pb, v);
    if (rem.is_zero()) break;
    if (deg_in_var(rem, v) <= 0) {
      // Nontrivial remainder of v-degree 0: primitive parts are coprime in v.
      pb = MPoly::constant(a.nvars(), Rational(1));
      break;
    }
    pa = pb;
    pb = mpoly_exact_div(rem, content_in_var(rem, v));
  }

  MPoly g = mpoly_gcd(ca, cb) * mpoly_exact_div(pb, content_in_var(pb, v));
  return mpoly_canonical_associate(g);
}

}  // namespace gkdim
