// SPDX-License-Identifier: Apache-2.0
#include "gkdim/echelon.hpp"

#include <numeric>

#include "omp_util.hpp"

namespace gkdim {

SparseVec sv_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
  SparseVec r;
  r.entries.reserve(a.entries.size() + b.entries.size());
  std::size_t i = 0, j = 0;
  while (i < a.entries.size() || j < b.entries.size()) {
    if (j == b.entries.size() ||
        (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
      r.entries.push_back(a.entries[i++]);
    } else if (i == a.entries.size() || b.entries[j].first < a.entries[i].first) {
      Scalar v = c * b.entries[j].second;
      if (!v.is_zero()) r.entries.emplace_back(b.entries[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = a.entries[i].second + c * b.entries[j].second;
      if (!v.is_zero()) r.entries.emplace_back(a.entries[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

SparseVec EchelonBasis::reduce(SparseVec v) const {
  // Eliminate pivot columns from the top down. An elimination at column c
  // only introduces columns below c, and columns above c have already been
  // checked, so bounding the search by the last eliminated column is safe.
  std::int64_t col_bound = INT64_MAX;
  while (!v.entries.empty()) {
    bool hit = false;
    std::size_t k = v.entries.size();
    while (k > 0) {
      --k;
      const std::int32_t col = v.entries[k].first;
      if (col >= col_bound) continue;
      const std::int32_t row = pivot_at(col);
      if (row < 0) continue;
      Scalar factor = -v.entries[k].second;  // pivot rows are monic
      v = sv_axpy(v, factor, rows_[row]);
      col_bound = col;
      hit = true;
      break;
    }
    if (!hit) break;
  }
  return v;
}

void EchelonBasis::adopt(SparseVec v) {
  Scalar inv = v.leading_coeff().inverse();
  if (!inv.is_one())
    for (auto& [col, c] : v.entries) c *= inv;
  const std::int32_t lead = v.leading_col();
  if (lead >= static_cast<std::int32_t>(pivot_of_col_.size()))
    pivot_of_col_.resize(lead + 1, -1);
  pivot_of_col_[lead] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(v));
}

bool EchelonBasis::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  adopt(std::move(v));
  return true;
}

void EchelonBasis::insert_batch(std::vector<SparseVec> vs, Exec policy) {
  std::vector<std::size_t> pending(vs.size());
  std::iota(pending.begin(), pending.end(), std::size_t{0});

  while (!pending.empty()) {
    const std::int64_t np = static_cast<std::int64_t>(pending.size());
    detail::omp_for(np, policy,
                    [&](std::int64_t i) { vs[pending[i]] = reduce(std::move(vs[pending[i]])); });

    // Adopt in order; rows whose pivot column got taken by an earlier
    // adoption this round go back for another reduction pass.
    std::vector<std::size_t> next;
    for (std::int64_t i = 0; i < np; ++i) {
      std::size_t idx = pending[i];
      if (vs[idx].empty()) continue;
      if (pivot_at(vs[idx].leading_col()) >= 0) {
        next.push_back(idx);
      } else {
        adopt(std::move(vs[idx]));
      }
    }
    pending = std::move(next);
  }
}

}  // namespace gkdim
