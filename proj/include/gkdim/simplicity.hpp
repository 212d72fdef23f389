// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_SIMPLICITY_HPP
#define GKDIM_SIMPLICITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "gkdim/laurent.hpp"

namespace gkdim {

enum class SimplicityStatus {
  SimpleByMcConnell,   // beta = 0 and the alpha_i are Q-linearly independent
  NotApplicable,       // beta = 0 but the independence test fails
  UnknownGeneralCase,  // some beta_i != 0: no criterion in scope
};

struct SimplicityVerdict {
  SimplicityStatus status;
  std::string detail;
};

const char* simplicity_status_name(SimplicityStatus s);

/// McConnell's sufficient condition for R = K_n[x, delta] to be simple.
/// The check never certifies non-simplicity.
SimplicityVerdict check_simplicity(const DerivationSpec& d);

/// One row of audit input: a module's fitted growth degree plus the
/// caller's own claim about simplicity.
struct AuditInput {
  std::string id;
  std::optional<int> degree;  // empty = unstable estimate
  bool asserted_simple = false;
};

enum class AuditVerdict { CertifiedNotSimple, ConsistentWithSimple };

struct AuditRow {
  std::string id;
  int degree = 0;
  AuditVerdict verdict = AuditVerdict::ConsistentWithSimple;
  std::string justification;
};

/// Contrapositive audit for R = K_n[x, delta]: a simple module's growth
/// degree lies in {1, n}, is never 0, and never reaches gk(R) = n+1. Any
/// degree outside {1, n} certifies non-simplicity; degrees inside are merely
/// consistent with it. Throws UnstableInput on an unstable report.
std::vector<AuditRow> dichotomy_audit(const std::vector<AuditInput>& reports, int n);

}  // namespace gkdim

#endif
