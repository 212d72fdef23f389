// SPDX-License-Identifier: Apache-2.0
#include "gkdim/torsion.hpp"

#include <algorithm>

#include "gkdim/groebner.hpp"
#include "omp_util.hpp"

namespace gkdim {

namespace {

// Lift variables: X_i at index i, Y_i (the inverse) at index n + i.

gb::GBPoly lift_laurent(const LaurentPoly& f, int n, int field) {
  gb::GBPoly p(2 * n, field);
  Expvec e(2 * n, 0);
  for (const auto& [a, c] : f.terms()) {
    for (int i = 0; i < n; ++i) {
      e[i] = a[i] > 0 ? a[i] : 0;
      e[n + i] = a[i] < 0 ? -a[i] : 0;
    }
    p.add_term(e, c);
  }
  return p;
}

LaurentPoly map_back(const gb::GBPoly& p, Ambient amb) {
  LaurentPoly f(amb);
  Expvec a(amb.nvars, 0);
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < amb.nvars; ++i) a[i] = e[i] - e[amb.nvars + i];
    f.add_term(a, c);
  }
  return f;
}

bool supported_on_kept(const gb::GBPoly& p, const std::vector<bool>& eliminated) {
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < eliminated.size(); ++i)
      if (eliminated[i] && e[i] != 0) return false;
  return true;
}

}  // namespace

LaurentIdealPresentation LaurentIdealPresentation::make(Ambient amb,
                                                        std::vector<LaurentPoly> gens) {
  LaurentIdealPresentation I;
  I.amb = amb;
  for (LaurentPoly& g : gens) {
    if (!(g.ambient() == amb))
      throw Error(ErrorKind::AmbientMismatch, "ideal generator ambient mismatch");
    if (!g.is_zero()) I.generators.push_back(std::move(g));
  }
  return I;
}

std::vector<LaurentPoly> eliminate(const LaurentIdealPresentation& I,
                                   const std::vector<int>& subset,
                                   const TorsionOptions& opts) {
  const int n = I.amb.nvars;
  std::vector<bool> in_subset(n, false);
  for (int v : subset) {
    if (v < 0 || v >= n)
      throw Error(ErrorKind::IndexOutOfRange, "subset variable out of range");
    in_subset[v] = true;
  }
  if (I.generators.empty()) return {};

  const int field = I.amb.trans;
  std::vector<gb::GBPoly> gens;
  for (const LaurentPoly& g : I.generators) gens.push_back(lift_laurent(g, n, field));
  for (int i = 0; i < n; ++i) {
    gb::GBPoly rel(2 * n, field);
    Expvec e(2 * n, 0);
    e[i] = 1;
    e[n + i] = 1;
    rel.add_term(e, Scalar::one(field));
    rel.add_term(Expvec(2 * n, 0), -Scalar::one(field));
    gens.push_back(std::move(rel));  // X_i Y_i - 1
  }

  gb::ElimOrder order;
  order.eliminated.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    order.eliminated[i] = !in_subset[i];
    order.eliminated[n + i] = !in_subset[i];
  }

  std::vector<gb::GBPoly> basis = gb::buchberger(std::move(gens), order, opts.degree_cap);

  std::vector<LaurentPoly> out;
  for (const gb::GBPoly& g : basis) {
    if (!supported_on_kept(g, order.eliminated)) continue;
    LaurentPoly f = map_back(g, I.amb);
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

bool is_torsion_over(const LaurentIdealPresentation& I, const std::vector<int>& subset,
                     const TorsionOptions& opts) {
  return !eliminate(I, subset, opts).empty();
}

TorsionProfile brookes_groves_t(const LaurentIdealPresentation& I, const TorsionOptions& opts) {
  const int n = I.amb.nvars;
  if (n > opts.subset_enum_cap)
    throw Error(ErrorKind::ResourceLimit,
                "subset enumeration over " + std::to_string(n) + " variables exceeds cap " +
                    std::to_string(opts.subset_enum_cap));

  std::vector<std::vector<int>> subsets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<TorsionState> states(subsets.size(), TorsionState::Torsion);
  detail::omp_for(static_cast<std::int64_t>(subsets.size()), opts.policy, [&](std::int64_t i) {
    states[i] =
        is_torsion_over(I, subsets[i], opts) ? TorsionState::Torsion : TorsionState::NotTorsion;
  });

  TorsionProfile profile;
  profile.nvars = n;
  profile.bg_t = -1;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    profile.by_subset.emplace(subsets[i], states[i]);
    if (states[i] == TorsionState::NotTorsion)
      profile.bg_t = std::max(profile.bg_t, static_cast<int>(subsets[i].size()));
  }
  return profile;
}

std::vector<CriticalityReport> criticality_witness(const LaurentIdealPresentation& I,
                                                   const std::vector<LaurentPoly>& candidates,
                                                   int m_max, int window,
                                                   const DimsOptions& dims_opts) {
  const ModulePresentation base = I.module();
  const DimensionSequence base_dims = module_filtration_dims(base, m_max, dims_opts);
  const bool base_zero =
      std::all_of(base_dims.dims.begin(), base_dims.dims.end(), [](auto d) { return d == 0; });
  GrowthReport base_report = gk_estimate(base_dims, window);
  if (!base_report.stable())
    throw Error(ErrorKind::DegreeUnstable, "base module growth did not stabilize");

  std::vector<CriticalityReport> out;
  for (const LaurentPoly& c : candidates) {
    std::vector<LaurentPoly> gens = I.generators;
    gens.push_back(c);
    const ModulePresentation quot =
        ModulePresentation::over_K(I.amb, std::move(gens));
    const DimensionSequence quot_dims = module_filtration_dims(quot, m_max, dims_opts);
    const bool quot_zero =
        std::all_of(quot_dims.dims.begin(), quot_dims.dims.end(), [](auto d) { return d == 0; });

    CriticalityReport report{c, WitnessVerdict::Fail, std::nullopt, std::nullopt};
    report.base_degree = base_report.degree;
    if (quot_zero) {
      // Zero quotient sits strictly below any nonzero module.
      report.quotient_degree = std::nullopt;
      report.verdict = base_zero ? WitnessVerdict::Fail : WitnessVerdict::Pass;
    } else {
      GrowthReport quot_report = gk_estimate(quot_dims, window);
      if (!quot_report.stable())
        throw Error(ErrorKind::DegreeUnstable, "quotient growth did not stabilize");
      report.quotient_degree = quot_report.degree;
      report.verdict = (!base_zero && *quot_report.degree < *base_report.degree)
                           ? WitnessVerdict::Pass
                           : WitnessVerdict::Fail;
    }
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace gkdim
