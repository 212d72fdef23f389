// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_TESTS_SUPPORT_HPP
#define GKDIM_TESTS_SUPPORT_HPP

#include <cstdlib>
#include <random>
#include <vector>

#include "gkdim/laurent.hpp"
#include "gkdim/ore.hpp"

namespace gkdim::testsupport {

/// Independent lattice-point oracle: count a in Z^n with sum |a_i| <= m by
/// direct enumeration of the cube [-m, m]^n.
inline std::int64_t brute_force_ball_count(int n, int m) {
  std::int64_t count = 0;
  std::vector<int> a(n, -m);
  while (true) {
    std::int64_t norm = 0;
    for (int v : a) norm += std::abs(v);
    if (norm <= m) ++count;
    int i = 0;
    while (i < n && a[i] == m) a[i++] = -m;
    if (i == n) break;
    ++a[i];
  }
  return count;
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  return Rational(num(rng), den(rng));
}

inline Scalar random_scalar(std::mt19937& rng, int trans, bool allow_zero = true) {
  if (trans == 0) {
    Rational q = random_rational(rng);
    if (!allow_zero && q.is_zero()) q = Rational(1);
    return Scalar::from_rational(q, 0);
  }
  // Small polynomial-over-polynomial values keep gcd work bounded.
  std::uniform_int_distribution<int> pick(0, 3);
  Scalar v = Scalar::from_rational(random_rational(rng), trans);
  for (int i = 0; i < trans; ++i) {
    if (pick(rng) == 0) v += Scalar::transcendental(i, trans) *
                             Scalar::from_rational(random_rational(rng), trans);
  }
  if (pick(rng) == 0) {
    Scalar den = Scalar::transcendental(0, trans) + Scalar::integer(2, trans);
    v = v / den;
  }
  if (!allow_zero && v.is_zero()) v = Scalar::one(trans);
  return v;
}

inline LaurentPoly random_laurent(std::mt19937& rng, Ambient amb, int max_terms, int max_exp,
                                  bool allow_zero = true) {
  std::uniform_int_distribution<int> nterms(allow_zero ? 0 : 1, max_terms);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  LaurentPoly f(amb);
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Expvec e(amb.nvars);
    for (auto& x : e) x = exp(rng);
    f.add_term(e, random_scalar(rng, amb.trans));
  }
  if (!allow_zero && f.is_zero())
    f.add_term(Expvec(amb.nvars, 0), Scalar::one(amb.trans));
  return f;
}

inline DerivationSpec random_derivation(std::mt19937& rng, int n, int trans,
                                        bool mcconnell = false) {
  std::vector<Scalar> alpha, beta;
  for (int i = 0; i < n; ++i) {
    alpha.push_back(random_scalar(rng, trans));
    beta.push_back(mcconnell ? Scalar::zero(trans) : random_scalar(rng, trans));
  }
  return DerivationSpec(std::move(alpha), std::move(beta));
}

inline OreElement random_ore(std::mt19937& rng, Ambient amb, const DerivationSpec& der,
                             int max_deg_x, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> deg(0, max_deg_x);
  OreElement u(amb, der);
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i)
    u.add_term(i, random_laurent(rng, amb, max_terms, max_exp));
  return u;
}

}  // namespace gkdim::testsupport

#endif
