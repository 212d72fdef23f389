// SPDX-License-Identifier: Apache-2.0
#include "gkdim/modpres.hpp"

#include <algorithm>
#include <optional>

#include "gkdim/basis.hpp"
#include "omp_util.hpp"

namespace gkdim {

ModulePresentation ModulePresentation::free_K(Ambient amb) {
  return over_K(amb, {});
}

ModulePresentation ModulePresentation::over_K(Ambient amb, std::vector<LaurentPoly> relations) {
  ModulePresentation p;
  p.over = OverAlgebra::BaseK;
  p.amb = amb;
  p.der = DerivationSpec::zero(amb.nvars, amb.trans);
  for (LaurentPoly& g : relations) {
    if (!(g.ambient() == amb))
      throw Error(ErrorKind::AmbientMismatch, "relation ambient mismatch");
    if (!g.is_zero()) p.k_relations.push_back(std::move(g));
  }
  return p;
}

ModulePresentation ModulePresentation::free_R(Ambient amb, DerivationSpec der) {
  return over_R(amb, std::move(der), {});
}

ModulePresentation ModulePresentation::over_R(Ambient amb, DerivationSpec der,
                                              std::vector<OreElement> relations) {
  ModulePresentation p;
  p.over = OverAlgebra::OreR;
  p.amb = amb;
  p.der = std::move(der);
  if (p.der.nvars() != amb.nvars || p.der.field() != amb.trans)
    throw Error(ErrorKind::AmbientMismatch, "derivation does not fit the ambient");
  for (OreElement& g : relations) {
    if (!(g.ambient() == amb))
      throw Error(ErrorKind::AmbientMismatch, "relation ambient mismatch");
    if (!(g.derivation() == p.der))
      throw Error(ErrorKind::DerivationMismatch, "relation derivation mismatch");
    if (!g.is_zero()) p.r_relations.push_back(std::move(g));
  }
  return p;
}

std::int64_t ModulePresentation::algebra_dim(int m) const {
  return over == OverAlgebra::BaseK ? filtration_dim_K(amb.nvars, m)
                                    : ore_dim_closed_form(amb.nvars, m);
}

std::string ModulePresentation::describe() const {
  std::string alg = over == OverAlgebra::BaseK
                        ? "K_" + std::to_string(amb.nvars)
                        : "R(K_" + std::to_string(amb.nvars) + ")";
  if (relation_count() == 0) return alg;
  std::string rels;
  if (over == OverAlgebra::BaseK) {
    for (const LaurentPoly& g : k_relations) {
      if (!rels.empty()) rels += ", ";
      rels += g.to_string();
    }
  } else {
    for (const OreElement& g : r_relations) {
      if (!rels.empty()) rels += ", ";
      rels += g.to_string();
    }
  }
  return alg + "/<" + rels + ">";
}

namespace {

/// Relation product rows bucketed by filtration level, in deterministic
/// (level, relation index, candidate index) order.
struct LevelRows {
  std::vector<std::vector<SparseVec>> by_level;
};

void check_limits(const ModulePresentation& p, std::int64_t columns, std::int64_t rows,
                  const DimsOptions& opts) {
  if (columns > opts.max_columns)
    throw Error(ErrorKind::ResourceLimit,
                "rank matrix for " + p.describe() + " needs " + std::to_string(columns) +
                    " columns (cap " + std::to_string(opts.max_columns) + ")");
  if (rows > opts.max_rows)
    throw Error(ErrorKind::ResourceLimit,
                "rank matrix for " + p.describe() + " needs " + std::to_string(rows) +
                    " rows (cap " + std::to_string(opts.max_rows) + ")");
}

LevelRows k_relation_rows(const ModulePresentation& p, const LaurentBallBasis& basis,
                          int m_max, const DimsOptions& opts) {
  LevelRows out;
  out.by_level.resize(m_max + 1);

  std::int64_t row_estimate = 0;
  std::vector<std::pair<const LaurentPoly*, std::vector<Expvec>>> jobs;
  for (const LaurentPoly& g : p.k_relations) {
    int radius = m_max + static_cast<int>(g.level());
    jobs.emplace_back(&g, l1_ball_basis(p.amb.nvars, radius));
    row_estimate += static_cast<std::int64_t>(jobs.back().second.size());
  }
  check_limits(p, static_cast<std::int64_t>(basis.size()), row_estimate, opts);

  for (auto& job : jobs) {
    const LaurentPoly& rel = *job.first;
    const std::vector<Expvec>& candidates = job.second;
    const std::int64_t nc = static_cast<std::int64_t>(candidates.size());
    std::vector<std::optional<std::pair<int, SparseVec>>> produced(nc);
    detail::omp_for(nc, opts.policy, [&](std::int64_t i) {
      LaurentPoly prod = rel.shifted(candidates[i], Scalar::one(p.amb.trans));
      const std::int64_t lev = prod.level();
      if (lev > m_max) return;
      produced[i] = std::make_pair(static_cast<int>(lev), basis.to_vec(prod));
    });
    for (auto& entry : produced)
      if (entry) out.by_level[entry->first].push_back(std::move(entry->second));
  }
  return out;
}

LevelRows r_relation_rows(const ModulePresentation& p, const OreBasis& basis, int m_max,
                          const DimsOptions& opts) {
  LevelRows out;
  out.by_level.resize(m_max + 1);

  std::int64_t row_estimate = 0;
  for (const OreElement& g : p.r_relations)
    row_estimate += ore_dim_closed_form(p.amb.nvars, m_max + static_cast<int>(g.level()));
  check_limits(p, static_cast<std::int64_t>(basis.size()), row_estimate, opts);

  for (const OreElement& g : p.r_relations) {
    const OreBasis candidates(p.amb, m_max + static_cast<int>(g.level()));
    const std::int64_t nc = static_cast<std::int64_t>(candidates.size());
    std::vector<std::optional<std::pair<int, SparseVec>>> produced(nc);
    detail::omp_for(nc, opts.policy, [&](std::int64_t i) {
      const auto& [a, j] = candidates.monomial(static_cast<std::int32_t>(i));
      OreElement w = OreElement::monomial(p.amb, p.der, a, j, Scalar::one(p.amb.trans));
      OreElement prod = g * w;
      const std::int64_t lev = prod.level();
      if (prod.is_zero() || lev > m_max) return;
      produced[i] = std::make_pair(static_cast<int>(lev), basis.to_vec(prod));
    });
    for (auto& entry : produced)
      if (entry) out.by_level[entry->first].push_back(std::move(entry->second));
  }
  return out;
}

LevelRows relation_rows(const ModulePresentation& p, const LaurentBallBasis* kb,
                        const OreBasis* rb, int m_max, const DimsOptions& opts) {
  return p.over == OverAlgebra::BaseK ? k_relation_rows(p, *kb, m_max, opts)
                                      : r_relation_rows(p, *rb, m_max, opts);
}

}  // namespace

DimensionSequence module_filtration_dims(const ModulePresentation& p, int m_max,
                                         const DimsOptions& opts) {
  if (m_max < 0) throw Error(ErrorKind::Input, "m_max must be >= 0");
  std::optional<LaurentBallBasis> kb;
  std::optional<OreBasis> rb;
  if (p.over == OverAlgebra::BaseK) kb.emplace(p.amb, m_max);
  else rb.emplace(p.amb, m_max);

  LevelRows rows = relation_rows(p, kb ? &*kb : nullptr, rb ? &*rb : nullptr, m_max, opts);

  DimensionSequence seq;
  seq.source = p.describe();
  EchelonBasis echelon(p.amb.trans);
  for (int m = 0; m <= m_max; ++m) {
    echelon.insert_batch(std::move(rows.by_level[m]), opts.policy);
    seq.dims.push_back(p.algebra_dim(m) - echelon.rank());
  }
  return seq;
}

DimensionSequence module_filtration_dims_reference(const ModulePresentation& p, int m_max,
                                                   const DimsOptions& opts) {
  if (m_max < 0) throw Error(ErrorKind::Input, "m_max must be >= 0");
  DimsOptions serial = opts;
  serial.policy = Exec::Serial;
  std::optional<LaurentBallBasis> kb;
  std::optional<OreBasis> rb;
  if (p.over == OverAlgebra::BaseK) kb.emplace(p.amb, m_max);
  else rb.emplace(p.amb, m_max);

  LevelRows rows = relation_rows(p, kb ? &*kb : nullptr, rb ? &*rb : nullptr, m_max, serial);

  DimensionSequence seq;
  seq.source = p.describe();
  for (int m = 0; m <= m_max; ++m) {
    EchelonBasis echelon(p.amb.trans);
    for (int l = 0; l <= m; ++l)
      for (const SparseVec& row : rows.by_level[l]) echelon.insert(row);
    seq.dims.push_back(p.algebra_dim(m) - echelon.rank());
  }
  return seq;
}

namespace {

EchelonBasis k_relation_echelon(const ModulePresentation& p, const LaurentBallBasis& basis,
                                int level, const DimsOptions& opts) {
  LevelRows rows = k_relation_rows(p, basis, level, opts);
  EchelonBasis echelon(p.amb.trans);
  for (int l = 0; l <= level; ++l)
    echelon.insert_batch(std::move(rows.by_level[l]), opts.policy);
  return echelon;
}

EchelonBasis r_relation_echelon(const ModulePresentation& p, const OreBasis& basis, int level,
                                const DimsOptions& opts) {
  LevelRows rows = r_relation_rows(p, basis, level, opts);
  EchelonBasis echelon(p.amb.trans);
  for (int l = 0; l <= level; ++l)
    echelon.insert_batch(std::move(rows.by_level[l]), opts.policy);
  return echelon;
}

}  // namespace

LaurentPoly coset_reduce(const ModulePresentation& p, const LaurentPoly& v,
                         const DimsOptions& opts) {
  if (p.over != OverAlgebra::BaseK)
    throw Error(ErrorKind::AmbientMismatch, "Laurent coset in an R-module presentation");
  if (!(v.ambient() == p.amb)) throw Error(ErrorKind::AmbientMismatch, "coset ambient mismatch");
  const int level = static_cast<int>(v.level());
  LaurentBallBasis basis(p.amb, level);
  EchelonBasis echelon = k_relation_echelon(p, basis, level, opts);
  return basis.from_vec(echelon.reduce(basis.to_vec(v)));
}

OreElement coset_reduce(const ModulePresentation& p, const OreElement& v,
                        const DimsOptions& opts) {
  if (p.over != OverAlgebra::OreR)
    throw Error(ErrorKind::AmbientMismatch, "Ore coset in a K-module presentation");
  if (!(v.ambient() == p.amb)) throw Error(ErrorKind::AmbientMismatch, "coset ambient mismatch");
  const int level = static_cast<int>(v.level());
  OreBasis basis(p.amb, level);
  EchelonBasis echelon = r_relation_echelon(p, basis, level, opts);
  return basis.from_vec(echelon.reduce(basis.to_vec(v)), p.der);
}

LaurentPoly coset_act(const ModulePresentation& p, const LaurentPoly& elem,
                      const LaurentPoly& r, const DimsOptions& opts) {
  return coset_reduce(p, elem * r, opts);
}

OreElement coset_act(const ModulePresentation& p, const OreElement& elem, const OreElement& r,
                     const DimsOptions& opts) {
  return coset_reduce(p, elem * r, opts);
}

InducedModule induce(const ModulePresentation& base, const DerivationSpec& d) {
  if (base.over != OverAlgebra::BaseK)
    throw Error(ErrorKind::AmbientMismatch, "induce requires a K_n-module presentation");
  if (d.nvars() != base.amb.nvars || d.field() != base.amb.trans)
    throw Error(ErrorKind::AmbientMismatch, "derivation does not fit the base ambient");
  return InducedModule{base, d};
}

DimensionSequence induced_filtration_dims(const InducedModule& im, int m_max,
                                          const DimsOptions& opts) {
  DimensionSequence base = module_filtration_dims(im.base, m_max, opts);
  DimensionSequence out = faulhaber_cumulative(base);
  out.source = "induced(" + im.base.describe() + ")";
  return out;
}

InducedElement induced_act(const InducedModule& im, const InducedElement& elem,
                           const OreElement& r) {
  const Ambient amb = im.base.amb;
  if (!(r.ambient() == amb)) throw Error(ErrorKind::AmbientMismatch, "acting element ambient");
  if (!(r.derivation() == im.der))
    throw Error(ErrorKind::DerivationMismatch, "acting element derivation");

  const int top = static_cast<int>(elem.comps.size()) - 1;
  InducedElement out;
  for (int j = 0; j <= r.deg_x(); ++j) {
    const LaurentPoly a = r.coeff(j);
    if (a.is_zero()) continue;
    // delta^l(a) for l up to the highest tensor power present.
    std::vector<LaurentPoly> derivs{a};
    for (int l = 1; l <= top; ++l) derivs.push_back(apply_derivation(im.der, derivs.back()));

    for (int i = 0; i <= top; ++i) {
      const LaurentPoly& v = elem.comps[i];
      if (v.is_zero()) continue;
      for (int l = 0; l <= i; ++l) {
        if (derivs[l].is_zero()) continue;
        LaurentPoly w = (v * derivs[l]).scaled(Scalar::from_rational(binomial(i, l), amb.trans));
        const std::size_t idx = static_cast<std::size_t>(i - l + j);
        if (out.comps.size() <= idx) out.comps.resize(idx + 1, LaurentPoly::zero(amb));
        out.comps[idx] += w;
      }
    }
  }
  while (!out.comps.empty() && out.comps.back().is_zero()) out.comps.pop_back();
  return out;
}

InducedElement induced_reduce(const InducedModule& im, const InducedElement& elem,
                              const DimsOptions& opts) {
  InducedElement out;
  out.comps.reserve(elem.comps.size());
  for (const LaurentPoly& v : elem.comps) out.comps.push_back(coset_reduce(im.base, v, opts));
  while (!out.comps.empty() && out.comps.back().is_zero()) out.comps.pop_back();
  return out;
}

DimensionSequence submodule_filtration_dims(const ModulePresentation& p, const LaurentPoly& c,
                                            int m_max, const DimsOptions& opts) {
  if (p.over != OverAlgebra::BaseK)
    throw Error(ErrorKind::AmbientMismatch, "submodule dims require a K_n presentation");
  if (m_max < 0) throw Error(ErrorKind::Input, "m_max must be >= 0");

  DimensionSequence seq;
  seq.source = "submodule<" + c.to_string() + "> of " + p.describe();
  if (c.is_zero()) {
    seq.dims.assign(m_max + 1, 0);
    return seq;
  }

  const int c_level = static_cast<int>(c.level());
  const int top = c_level + m_max;
  LaurentBallBasis basis(p.amb, top);
  LevelRows rows = k_relation_rows(p, basis, top, opts);

  EchelonBasis relation_span(p.amb.trans);
  int inserted_level = -1;
  for (int m = 0; m <= m_max; ++m) {
    const int level = c_level + m;
    while (inserted_level < level) {
      ++inserted_level;
      relation_span.insert_batch(std::move(rows.by_level[inserted_level]), opts.policy);
    }
    // Adjoin the generator multiples c*w for w in the m-ball; the number of
    // fresh pivots is the dimension of coset(c)*A_m inside M_{level}.
    EchelonBasis joint = relation_span;
    std::int64_t count = 0;
    for (const Expvec& w : l1_ball_basis(p.amb.nvars, m))
      if (joint.insert(basis.to_vec(c.shifted(w, Scalar::one(p.amb.trans))))) ++count;
    seq.dims.push_back(count);
  }
  return seq;
}

DimensionSequence restricted_filtration_dims(const ModulePresentation& p,
                                             const std::vector<int>& subset, int m_max,
                                             const DimsOptions& opts) {
  if (p.over != OverAlgebra::BaseK)
    throw Error(ErrorKind::AmbientMismatch, "restriction requires a K_n presentation");
  if (m_max < 0) throw Error(ErrorKind::Input, "m_max must be >= 0");
  for (int v : subset)
    if (v < 0 || v >= p.amb.nvars)
      throw Error(ErrorKind::IndexOutOfRange, "subset variable out of range");

  DimensionSequence seq;
  std::string vars;
  for (int v : subset) vars += (vars.empty() ? "" : ",") + std::string("x") + std::to_string(v + 1);
  seq.source = "restrict(" + p.describe() + "; {" + vars + "})";

  LaurentBallBasis basis(p.amb, m_max);
  LevelRows rows = k_relation_rows(p, basis, m_max, opts);

  EchelonBasis relation_span(p.amb.trans);
  const int s = static_cast<int>(subset.size());
  for (int m = 0; m <= m_max; ++m) {
    relation_span.insert_batch(std::move(rows.by_level[m]), opts.policy);
    EchelonBasis joint = relation_span;
    std::int64_t count = 0;
    // Monomials of the S-ball of radius m, embedded in the full ambient.
    std::vector<Expvec> sball =
        s == 0 ? std::vector<Expvec>{Expvec{}} : l1_ball_basis(s, m);
    for (const Expvec& se : sball) {
      Expvec e(p.amb.nvars, 0);
      for (int i = 0; i < s; ++i) e[subset[i]] = se[i];
      SparseVec unit;
      unit.entries.emplace_back(basis.col(e), Scalar::one(p.amb.trans));
      if (joint.insert(std::move(unit))) ++count;
    }
    seq.dims.push_back(count);
  }
  return seq;
}

}  // namespace gkdim
