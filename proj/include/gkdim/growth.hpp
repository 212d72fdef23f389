// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_GROWTH_HPP
#define GKDIM_GROWTH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkdim/rational.hpp"

namespace gkdim {

/// Filtration dimension sequence dims[m] = dim_k M_m.
struct DimensionSequence {
  std::vector<std::int64_t> dims;
  std::string source;

  std::size_t size() const { return dims.size(); }
};

/// Univariate polynomial with rational coefficients, ascending by degree.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly zero() { return UniPoly(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(std::int64_t m) const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Canonical text form, e.g. "2*m^2 + 2*m + 1".
  std::string to_string(const std::string& var = "m") const;

private:
  void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
  std::vector<Rational> c_;
};

/// Result of GK-degree estimation. degree is empty when the sequence did
/// not stabilize to polynomial growth (Unstable is a result, not an error).
struct GrowthReport {
  std::optional<int> degree;
  std::optional<UniPoly> hilbert;
  int window = 0;
  Rational residual = Rational(0);
  std::string source;

  bool stable() const { return degree.has_value(); }

  /// Key-value text serialization (one "key = value" per line).
  std::string to_kv() const;
};

/// Least d whose d-th forward differences are constant and whose (d+1)-th
/// differences vanish across the final `window` entries; empty if none.
std::optional<int> finite_difference_degree(const DimensionSequence& seq, int window);

/// Exact interpolation of the stabilized tail; degree comes from
/// finite_difference_degree (DegreeUnstable when that fails).
UniPoly fit_hilbert_polynomial(const DimensionSequence& seq, int window);

/// Partial sums m -> sum_{t<=m} dims[t].
DimensionSequence faulhaber_cumulative(const DimensionSequence& seq);

/// Full growth report: degree, Hilbert polynomial, exactness residual.
GrowthReport gk_estimate(const DimensionSequence& seq, int window = 3);

}  // namespace gkdim

#endif
