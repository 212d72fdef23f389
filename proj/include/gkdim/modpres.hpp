// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_MODPRES_HPP
#define GKDIM_MODPRES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gkdim/growth.hpp"
#include "gkdim/ore.hpp"

namespace gkdim {

enum class OverAlgebra { BaseK, OreR };

/// Cyclic right module A/J given by a finite list of relations generating
/// the right ideal J, with A = K_n or A = R = K_n[x, delta].
struct ModulePresentation {
  OverAlgebra over = OverAlgebra::BaseK;
  Ambient amb;
  DerivationSpec der;                    // the Ore derivation; unused for BaseK
  std::vector<LaurentPoly> k_relations;  // over == BaseK
  std::vector<OreElement> r_relations;   // over == OreR

  static ModulePresentation free_K(Ambient amb);
  static ModulePresentation over_K(Ambient amb, std::vector<LaurentPoly> relations);
  static ModulePresentation free_R(Ambient amb, DerivationSpec der);
  static ModulePresentation over_R(Ambient amb, DerivationSpec der,
                                   std::vector<OreElement> relations);

  std::size_t relation_count() const {
    return over == OverAlgebra::BaseK ? k_relations.size() : r_relations.size();
  }
  /// dim_k A_m of the ambient algebra filtration.
  std::int64_t algebra_dim(int m) const;
  std::string describe() const;
};

struct DimsOptions {
  Exec policy = Exec::Parallel;
  std::int64_t max_columns = 2'000'000;  // ResourceLimit guard on basis size
  std::int64_t max_rows = 20'000'000;    // ResourceLimit guard on relation rows
};

/// Filtration dimensions dim M_m for m = 0..m_max, computed as
/// dim A_m - rank{g*w : g a relation, w a monomial with g*w inside A_m}.
/// The rank side spans a subspace of J cap A_m, so small levels can
/// overestimate dim M_m; degree estimates are read off stabilized tails.
DimensionSequence module_filtration_dims(const ModulePresentation& p, int m_max,
                                         const DimsOptions& opts = {});

/// Serial reference: recomputes every level from scratch instead of
/// growing one echelon basis through the levels. Kept for testing and for
/// the kernel benchmark.
DimensionSequence module_filtration_dims_reference(const ModulePresentation& p, int m_max,
                                                   const DimsOptions& opts = {});

/// Canonical coset representative of v at the filtration level of v.
LaurentPoly coset_reduce(const ModulePresentation& p, const LaurentPoly& v,
                         const DimsOptions& opts = {});
OreElement coset_reduce(const ModulePresentation& p, const OreElement& v,
                        const DimsOptions& opts = {});

/// Right action on cosets: multiply in the algebra, then reduce modulo the
/// relation span at the product's filtration level.
LaurentPoly coset_act(const ModulePresentation& p, const LaurentPoly& elem,
                      const LaurentPoly& r, const DimsOptions& opts = {});
OreElement coset_act(const ModulePresentation& p, const OreElement& elem,
                     const OreElement& r, const DimsOptions& opts = {});

/// The induced module N (x)_{K_n} R for a cyclic K_n-module N.
struct InducedModule {
  ModulePresentation base;  // over BaseK
  DerivationSpec der;
};

InducedModule induce(const ModulePresentation& base, const DerivationSpec& d);

/// dim (N (x) R)_m = sum_{t<=m} dim N_t: the x-power decomposition turns the
/// induced filtration into cumulative sums of the base filtration.
DimensionSequence induced_filtration_dims(const InducedModule& im, int m_max,
                                          const DimsOptions& opts = {});

/// Element sum_i v_i (x) x^i of an induced module, with components kept as
/// lifts in K_n.
struct InducedElement {
  std::vector<LaurentPoly> comps;
};

/// Right action by r in R via (v (x) x^i)*a = sum_l C(i,l) (v*delta^l(a)) (x) x^{i-l}
/// and (v (x) x^i)*x = v (x) x^{i+1}, extended along the normal form of r.
InducedElement induced_act(const InducedModule& im, const InducedElement& elem,
                           const OreElement& r);

/// Reduce every component to its canonical coset representative in the base.
InducedElement induced_reduce(const InducedModule& im, const InducedElement& elem,
                              const DimsOptions& opts = {});

/// Dimensions of the cyclic submodule generated by coset(c) inside K_n/I
/// (filtration from the generating subspace span{coset(c)}).
DimensionSequence submodule_filtration_dims(const ModulePresentation& p, const LaurentPoly& c,
                                            int m_max, const DimsOptions& opts = {});

/// Dimensions of gen * K_S, the restriction of the cyclic module to the
/// Laurent subalgebra on the 0-based variable subset S.
DimensionSequence restricted_filtration_dims(const ModulePresentation& p,
                                             const std::vector<int>& subset, int m_max,
                                             const DimsOptions& opts = {});

}  // namespace gkdim

#endif
