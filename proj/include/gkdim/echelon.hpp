// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_ECHELON_HPP
#define GKDIM_ECHELON_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "gkdim/scalar.hpp"

namespace gkdim {

/// Kernel execution policy. Parallel variants use OpenMP and are required
/// to produce results identical to the serial reference.
enum class Exec { Serial, Parallel };

/// Sparse vector over the base field: (column, coefficient) pairs with
/// strictly ascending columns and nonzero coefficients.
struct SparseVec {
  std::vector<std::pair<std::int32_t, Scalar>> entries;

  bool empty() const { return entries.empty(); }
  std::int32_t leading_col() const { return entries.back().first; }
  const Scalar& leading_coeff() const { return entries.back().second; }

  friend bool operator==(const SparseVec&, const SparseVec&) = default;
};

/// r = a + c*b, merged by column.
SparseVec sv_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);

/// Incremental row-echelon basis over the exact base field. Pivot of a row
/// is its largest column; pivot columns are distinct. The span determines
/// rank and canonical normal forms; both are independent of insertion
/// batching, which is what makes the parallel batch path safe.
class EchelonBasis {
public:
  explicit EchelonBasis(int field) : field_(field) {}

  std::int64_t rank() const { return static_cast<std::int64_t>(rows_.size()); }
  const std::vector<SparseVec>& rows() const { return rows_; }

  /// Canonical normal form of v modulo the row span: the unique
  /// representative whose support avoids every pivot column.
  SparseVec reduce(SparseVec v) const;

  /// Insert one vector; returns true when the rank grew.
  bool insert(SparseVec v);

  /// Insert many vectors. The heavy reductions run in parallel under
  /// Exec::Parallel; the resulting span (hence rank and all normal forms)
  /// is identical to serial insertion in the given order.
  void insert_batch(std::vector<SparseVec> vs, Exec policy);

private:
  void adopt(SparseVec v);
  std::int32_t pivot_at(std::int32_t col) const {
    return col < static_cast<std::int32_t>(pivot_of_col_.size()) ? pivot_of_col_[col] : -1;
  }
  int field_;
  std::vector<SparseVec> rows_;
  std::vector<std::int32_t> pivot_of_col_;  // column -> row index, -1 = none
};

}  // namespace gkdim

#endif
