// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_BASIS_HPP
#define GKDIM_BASIS_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gkdim/echelon.hpp"
#include "gkdim/ore.hpp"

namespace gkdim {

/// Column indexing for K_n filtration levels: the l1 ball of radius m_max,
/// ascending by graded-lex-abs, so the basis of K_m is a prefix.
class LaurentBallBasis {
public:
  LaurentBallBasis(Ambient amb, int m_max);

  const Ambient& ambient() const { return amb_; }
  int m_max() const { return m_max_; }
  std::size_t size() const { return monomials_.size(); }
  std::int64_t dim_at_level(int m) const;
  std::int32_t col(const Expvec& e) const;
  const Expvec& monomial(std::int32_t col) const { return monomials_.at(col); }

  SparseVec to_vec(const LaurentPoly& f) const;
  LaurentPoly from_vec(const SparseVec& v) const;

private:
  Ambient amb_;
  int m_max_;
  std::vector<Expvec> monomials_;
  std::map<Expvec, std::int32_t> index_;
};

/// Column indexing for R filtration levels: normal-form monomials x^a x^j
/// with |a| + j <= m_max, ascending by (|a|+j, j, a lex).
class OreBasis {
public:
  OreBasis(Ambient amb, int m_max);

  const Ambient& ambient() const { return amb_; }
  int m_max() const { return m_max_; }
  std::size_t size() const { return monomials_.size(); }
  std::int64_t dim_at_level(int m) const;
  std::int32_t col(const Expvec& e, int j) const;
  const std::pair<Expvec, int>& monomial(std::int32_t col) const { return monomials_.at(col); }

  SparseVec to_vec(const OreElement& u) const;
  OreElement from_vec(const SparseVec& v, const DerivationSpec& der) const;

private:
  Ambient amb_;
  int m_max_;
  std::vector<std::pair<Expvec, int>> monomials_;
  std::map<std::pair<Expvec, int>, std::int32_t> index_;
};

}  // namespace gkdim

#endif
