// SPDX-License-Identifier: Apache-2.0
#include "gkdim/basis.hpp"

#include <algorithm>

namespace gkdim {

LaurentBallBasis::LaurentBallBasis(Ambient amb, int m_max)
    : amb_(amb), m_max_(m_max), monomials_(l1_ball_basis(amb.nvars, m_max)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    index_.emplace(monomials_[i], static_cast<std::int32_t>(i));
}

std::int64_t LaurentBallBasis::dim_at_level(int m) const {
  if (m < 0) return 0;
  return filtration_dim_K(amb_.nvars, std::min(m, m_max_));
}

std::int32_t LaurentBallBasis::col(const Expvec& e) const {
  auto it = index_.find(e);
  if (it == index_.end())
    throw Error(ErrorKind::Internal, "monomial outside the basis ball");
  return it->second;
}

SparseVec LaurentBallBasis::to_vec(const LaurentPoly& f) const {
  SparseVec v;
  v.entries.reserve(f.term_count());
  for (const auto& [e, c] : f.terms()) v.entries.emplace_back(col(e), c);
  std::sort(v.entries.begin(), v.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

LaurentPoly LaurentBallBasis::from_vec(const SparseVec& v) const {
  LaurentPoly f(amb_);
  for (const auto& [c, s] : v.entries) f.add_term(monomial(c), s);
  return f;
}

OreBasis::OreBasis(Ambient amb, int m_max) : amb_(amb), m_max_(m_max) {
  for (int j = 0; j <= m_max; ++j)
    for (const Expvec& a : l1_ball_basis(amb.nvars, m_max - j))
      monomials_.emplace_back(a, j);
  std::sort(monomials_.begin(), monomials_.end(), [](const auto& p, const auto& q) {
    const std::int64_t lp = l1_norm(p.first) + p.second;
    const std::int64_t lq = l1_norm(q.first) + q.second;
    if (lp != lq) return lp < lq;
    if (p.second != q.second) return p.second < q.second;
    return p.first < q.first;
  });
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    index_.emplace(monomials_[i], static_cast<std::int32_t>(i));
}

std::int64_t OreBasis::dim_at_level(int m) const {
  if (m < 0) return 0;
  return ore_dim_closed_form(amb_.nvars, std::min(m, m_max_));
}

std::int32_t OreBasis::col(const Expvec& e, int j) const {
  auto it = index_.find(std::make_pair(e, j));
  if (it == index_.end())
    throw Error(ErrorKind::Internal, "monomial outside the basis ball");
  return it->second;
}

SparseVec OreBasis::to_vec(const OreElement& u) const {
  SparseVec v;
  for (int j = 0; j <= u.deg_x(); ++j)
    for (const auto& [e, c] : u.coeffs()[j].terms()) v.entries.emplace_back(col(e, j), c);
  std::sort(v.entries.begin(), v.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

OreElement OreBasis::from_vec(const SparseVec& v, const DerivationSpec& der) const {
  OreElement u(amb_, der);
  for (const auto& [c, s] : v.entries) {
    const auto& [e, j] = monomial(c);
    u.add_term(j, LaurentPoly::monomial(amb_, e, s));
  }
  return u;
}

}  // namespace gkdim
