// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_ORE_HPP
#define GKDIM_ORE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gkdim/echelon.hpp"
#include "gkdim/laurent.hpp"

namespace gkdim {

/// Element of R = K_n[x, delta] in normal form sum_i a_i * x^i with Laurent
/// coefficients written on the left. Multiplication uses the commutation
/// rule x*a = a*x + delta(a).
class OreElement {
public:
  OreElement(Ambient amb, DerivationSpec der) : amb_(amb), der_(std::move(der)) {}

  static OreElement zero(Ambient amb, const DerivationSpec& der) { return {amb, der}; }
  static OreElement one(Ambient amb, const DerivationSpec& der);
  static OreElement from_laurent(const LaurentPoly& a, const DerivationSpec& der);
  static OreElement x_power(Ambient amb, const DerivationSpec& der, int k);
  /// c * x^a * x^j.
  static OreElement monomial(Ambient amb, const DerivationSpec& der, const Expvec& a,
                             int j, const Scalar& c);

  const Ambient& ambient() const { return amb_; }
  const DerivationSpec& derivation() const { return der_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree in x; -1 for the zero element.
  int deg_x() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i (zero polynomial when i exceeds the degree).
  LaurentPoly coeff(int i) const;
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

  /// Least filtration level of R containing the element:
  /// max_i (level(a_i) + i).
  std::int64_t level() const;

  void add_term(int i, const LaurentPoly& a);

  OreElement operator-() const;
  OreElement& operator+=(const OreElement& o);
  OreElement& operator-=(const OreElement& o);
  friend OreElement operator+(OreElement a, const OreElement& b) { a += b; return a; }
  friend OreElement operator-(OreElement a, const OreElement& b) { a -= b; return a; }
  friend OreElement operator*(const OreElement& a, const OreElement& b);

  OreElement scaled(const Scalar& c) const;

  friend bool operator==(const OreElement& a, const OreElement& b);
  friend bool operator!=(const OreElement& a, const OreElement& b) { return !(a == b); }

  std::string to_string() const;

private:
  void trim();
  void check_compatible(const OreElement& o) const;
  Ambient amb_;
  DerivationSpec der_;
  std::vector<LaurentPoly> coeffs_;  // coeffs_[i] multiplies x^i; back() nonzero
};

/// Normal-form product; alias of operator*.
OreElement ore_mul(const OreElement& u, const OreElement& v);

/// dim_k R_m = sum_{i=0}^{m} dim_k K_{m-i}, the dimension of the
/// decomposition  R_m = (+)_{i} K_{m-i} x^i.
std::int64_t ore_dim_closed_form(int n, int m);

struct OracleOptions {
  std::int64_t step_cap = 10'000'000;  // generator multiplications
  Exec policy = Exec::Parallel;
};

/// Dimension of the span of all reduced words of length <= m in the 2n+1
/// generators, plus a spanning witness of independent normal forms.
struct WordBasisReport {
  int m = 0;
  std::int64_t dim = 0;
  std::vector<OreElement> basis_rank_witness;
};

/// Brute-force word-enumeration oracle for dim_k R_m.
WordBasisReport ore_dim_oracle(Ambient amb, const DerivationSpec& der, int m,
                               const OracleOptions& opts = {});

/// Oracle dimensions for every level 0..m_max in one enumeration pass.
std::vector<std::int64_t> oracle_dim_sequence(Ambient amb, const DerivationSpec& der,
                                              int m_max, const OracleOptions& opts = {});

}  // namespace gkdim

#endif
