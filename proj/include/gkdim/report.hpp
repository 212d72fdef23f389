// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_REPORT_HPP
#define GKDIM_REPORT_HPP

#include <string>
#include <vector>

#include "gkdim/growth.hpp"
#include "gkdim/simplicity.hpp"
#include "gkdim/torsion.hpp"

namespace gkdim {

/// CSV with header m,dim.
std::string dims_to_csv(const DimensionSequence& seq);

/// Deterministic JSON text for a torsion profile (subsets by size, then lex;
/// variables reported 1-based).
std::string torsion_to_json(const TorsionProfile& profile, const std::string& module_desc);

std::string simplicity_to_json(const SimplicityVerdict& verdict);

/// CSV with header id,degree,verdict,justification.
std::string audit_to_csv(const std::vector<AuditRow>& rows);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace gkdim

#endif
