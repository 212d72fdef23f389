// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_MPOLY_HPP
#define GKDIM_MPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gkdim/rational.hpp"

namespace gkdim {

/// Exponent vector. Entries are nonnegative for ordinary polynomials;
/// the Laurent layer reuses the type with signed entries.
using Expvec = std::vector<std::int32_t>;

/// Graded-lexicographic order on nonnegative exponent vectors.
bool grlex_less(const Expvec& a, const Expvec& b);

/// Sparse multivariate polynomial over Q, used as numerator/denominator of
/// rational functions in the transcendentals t_1..t_r.
class MPoly {
public:
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, const Rational& c);
  static MPoly variable(int nvars, int i);  // t_{i+1}, 0-based index

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero polynomial gives 0).
  Rational constant_value() const;

  const std::map<Expvec, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Expvec& e, const Rational& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
  friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);

  MPoly scaled(const Rational& c) const;
  /// Multiply by c * t^shift (monomial times scalar).
  MPoly shifted(const Expvec& shift, const Rational& c) const;

  /// Largest monomial under grlex; polynomial must be nonzero.
  const Expvec& leading_monomial() const;
  Rational leading_coeff() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int var) const;

  bool depends_on(int var) const { return degree_in(var) > 0; }

  std::string to_string(const std::string& var_prefix = "t") const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

private:
  int nvars_;
  std::map<Expvec, Rational> terms_;  // keys lexicographic, values nonzero
};

/// Canonical associate: integer-primitive with positive leading (grlex)
/// coefficient. Zero maps to zero.
MPoly mpoly_canonical_associate(const MPoly& p);

/// GCD over Q[t_1..t_r] via content/primitive-part recursion and a primitive
/// pseudo-remainder sequence. Result is the canonical associate.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

/// Exact division; throws Internal if b does not divide a.
MPoly mpoly_exact_div(const MPoly& a, const MPoly& b);

}  // namespace gkdim

#endif
