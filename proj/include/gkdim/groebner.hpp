// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_GROEBNER_HPP
#define GKDIM_GROEBNER_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "gkdim/scalar.hpp"

namespace gkdim::gb {

/// Block elimination order on k[X_1..X_N]: monomials are compared by
/// graded-lex on the eliminated block first, then graded-lex on the kept
/// block. Any monomial touching an eliminated variable sorts above every
/// monomial in kept variables only.
struct ElimOrder {
  std::vector<bool> eliminated;

  bool less(const Expvec& a, const Expvec& b) const;
};

/// Sparse commutative polynomial over the Scalar field with nonnegative
/// exponents; the working representation of the Buchberger engine.
class GBPoly {
public:
  GBPoly(int nvars, int field) : nvars_(nvars), field_(field) {}

  int nvars() const { return nvars_; }
  int field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expvec, Scalar>& terms() const { return terms_; }

  void add_term(const Expvec& e, const Scalar& c);
  int total_degree() const;

  /// Largest monomial under the given order; polynomial must be nonzero.
  const Expvec& leading_monomial(const ElimOrder& order) const;
  const Scalar& coeff_at(const Expvec& e) const;

  GBPoly scaled(const Scalar& c) const;
  /// this += c * X^shift * q
  void add_scaled_shifted(const GBPoly& q, const Expvec& shift, const Scalar& c);

  friend bool operator==(const GBPoly& a, const GBPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

private:
  int nvars_;
  int field_;
  std::map<Expvec, Scalar> terms_;
};

/// Full normal form of p against the basis (first divisor wins; leading
/// terms not divisible by any basis leading term move to the remainder).
GBPoly normal_form(GBPoly p, const std::vector<GBPoly>& basis, const ElimOrder& order);

/// Buchberger with the product criterion and a hard total-degree cap; the
/// result is the reduced Groebner basis, monic, sorted by leading monomial.
/// Throws ResourceLimit when any processed S-pair or intermediate result
/// exceeds the cap.
std::vector<GBPoly> buchberger(std::vector<GBPoly> gens, const ElimOrder& order, int degree_cap);

}  // namespace gkdim::gb

#endif
