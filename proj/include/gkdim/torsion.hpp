// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_TORSION_HPP
#define GKDIM_TORSION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkdim/growth.hpp"
#include "gkdim/laurent.hpp"
#include "gkdim/modpres.hpp"

namespace gkdim {

/// Ideal I of K_n presenting the cyclic module N = K_n/I.
struct LaurentIdealPresentation {
  Ambient amb;
  std::vector<LaurentPoly> generators;  // zeros pruned

  static LaurentIdealPresentation make(Ambient amb, std::vector<LaurentPoly> gens);
  ModulePresentation module() const { return ModulePresentation::over_K(amb, generators); }
  std::string describe() const { return module().describe(); }
};

enum class TorsionState { Torsion, NotTorsion };

/// Per-subset torsion results; subsets are sorted 0-based variable index
/// lists. bg_t is the maximal |S| with NotTorsion (-1 for the zero module).
struct TorsionProfile {
  int nvars = 0;
  std::map<std::vector<int>, TorsionState> by_subset;
  int bg_t = -1;
};

struct TorsionOptions {
  int degree_cap = 20;       // Groebner hard total-degree cap
  int subset_enum_cap = 12;  // refuse 2^n enumeration beyond this n
  Exec policy = Exec::Parallel;
};

/// Generators of I cap k[x_i^{±1} : i in S], by Groebner elimination on the
/// double-variable lift x_i y_i = 1 of K_n. Returned generators live in the
/// full ambient with support on S only; the list is empty iff the
/// elimination ideal is zero.
std::vector<LaurentPoly> eliminate(const LaurentIdealPresentation& I,
                                   const std::vector<int>& subset,
                                   const TorsionOptions& opts = {});

/// Cyclic N = K_n/I is torsion over the S-subalgebra iff the elimination
/// ideal is nonzero (the generator's annihilator meets the subalgebra).
bool is_torsion_over(const LaurentIdealPresentation& I, const std::vector<int>& subset,
                     const TorsionOptions& opts = {});

/// Evaluate every coordinate subset and report the Brookes-Groves number.
TorsionProfile brookes_groves_t(const LaurentIdealPresentation& I,
                                const TorsionOptions& opts = {});

enum class WitnessVerdict { Pass, Fail };

struct CriticalityReport {
  LaurentPoly candidate;
  WitnessVerdict verdict;
  std::optional<int> base_degree;      // gk estimate of K_n/I
  std::optional<int> quotient_degree;  // gk estimate of K_n/(I + (c)); empty for the zero module
};

/// For each candidate c, Pass iff gk(K_n/(I + (c))) < gk(K_n/I), with the
/// zero quotient counting as strictly smaller than any nonzero module.
/// Certifies only the tested candidates, never full criticality.
std::vector<CriticalityReport> criticality_witness(const LaurentIdealPresentation& I,
                                                   const std::vector<LaurentPoly>& candidates,
                                                   int m_max, int window = 3,
                                                   const DimsOptions& dims_opts = {});

}  // namespace gkdim

#endif
