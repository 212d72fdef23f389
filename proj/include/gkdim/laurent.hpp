// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_LAURENT_HPP
#define GKDIM_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gkdim/scalar.hpp"

namespace gkdim {

/// Ambient data of K_n = k[x_1^{±1},..,x_n^{±1}]: number of Laurent
/// variables and the field descriptor (number of transcendentals in k).
struct Ambient {
  std::int32_t nvars = 0;
  std::int32_t trans = 0;

  friend bool operator==(const Ambient&, const Ambient&) = default;
  std::string to_string() const {
    return "K_" + std::to_string(nvars) + " over Q(t_1..t_" + std::to_string(trans) + ")";
  }
};

std::int64_t l1_norm(const Expvec& e);

/// Graded-lex order on signed exponent vectors: grade by the l1 norm, break
/// ties lexicographically. This is the canonical term/basis order.
bool grlex_abs_less(const Expvec& a, const Expvec& b);

/// Checked exponent addition; throws Overflow instead of wrapping.
Expvec exp_add(const Expvec& a, const Expvec& b);

/// Sparse element of K_n: finite map from Z^n exponent vectors to nonzero
/// Scalars.
class LaurentPoly {
public:
  explicit LaurentPoly(Ambient amb) : amb_(amb) {}

  static LaurentPoly zero(Ambient amb) { return LaurentPoly(amb); }
  static LaurentPoly constant(Ambient amb, const Scalar& c);
  static LaurentPoly one(Ambient amb) { return constant(amb, Scalar::one(amb.trans)); }
  static LaurentPoly monomial(Ambient amb, const Expvec& e, const Scalar& c);
  /// x_{i+1}^exp for 0-based i; exp may be negative.
  static LaurentPoly variable(Ambient amb, int i, std::int32_t exp = 1);

  const Ambient& ambient() const { return amb_; }
  const std::map<Expvec, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  bool is_constant() const;
  /// Constant term value (zero scalar if absent).
  Scalar constant_value() const;

  void add_term(const Expvec& e, const Scalar& c);

  /// Least filtration level containing the element: max l1 norm over the
  /// support (0 for the zero element).
  std::int64_t level() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const Scalar& c) const;
  /// Multiply by the monomial c * x^shift.
  LaurentPoly shifted(const Expvec& shift, const Scalar& c) const;
  LaurentPoly pow(int k) const;  // k >= 0

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.amb_ == b.amb_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Canonical printing: terms in descending graded-lex-abs order.
  std::string to_string() const;

private:
  void check_ambient(const LaurentPoly& o) const;
  Ambient amb_;
  std::map<Expvec, Scalar> terms_;
};

/// The derivation delta = sum_i (alpha_i x_i + beta_i) d/dx_i. The g_i are
/// restricted to k*x_i + k by construction; no other shape is representable.
struct DerivationSpec {
  std::vector<Scalar> alpha;
  std::vector<Scalar> beta;

  DerivationSpec() = default;
  DerivationSpec(std::vector<Scalar> a, std::vector<Scalar> b);

  int nvars() const { return static_cast<int>(alpha.size()); }
  int field() const { return alpha.empty() ? 0 : alpha.front().field(); }
  /// True when all beta_i vanish (the McConnell shape g_i = lambda_i x_i).
  bool is_mcconnell() const;

  /// The zero derivation in n variables over field descriptor trans.
  static DerivationSpec zero(int n, int trans);
  /// McConnell derivation with lambda_i = t_i over Q(t_1..t_n).
  static DerivationSpec mcconnell_generic(int n);

  friend bool operator==(const DerivationSpec&, const DerivationSpec&) = default;
};

/// Formal partial derivative d/dx_{i+1} (0-based i) on Laurent monomials.
LaurentPoly partial_derivative(const LaurentPoly& f, int i);

/// delta(f) = sum_i (alpha_i x_i + beta_i) * df/dx_i.
LaurentPoly apply_derivation(const DerivationSpec& d, const LaurentPoly& f);

/// dim_k K_m = #{a in Z^n : sum |a_i| <= m} in closed form.
std::int64_t filtration_dim_K(int n, int m);

/// The l1 ball of radius m in Z^n, sorted ascending by graded-lex-abs.
/// This is the canonical monomial basis of the filtration level K_m.
std::vector<Expvec> l1_ball_basis(int n, int m);

}  // namespace gkdim

#endif
