// SPDX-License-Identifier: Apache-2.0
#include "gkdim/simplicity.hpp"

namespace gkdim {

const char* simplicity_status_name(SimplicityStatus s) {
  switch (s) {
    case SimplicityStatus::SimpleByMcConnell: return "SimpleByMcConnell";
    case SimplicityStatus::NotApplicable: return "NotApplicable";
    case SimplicityStatus::UnknownGeneralCase: return "UnknownGeneralCase";
  }
  return "?";
}

SimplicityVerdict check_simplicity(const DerivationSpec& d) {
  if (d.nvars() < 1) throw Error(ErrorKind::Input, "derivation over zero variables");
  if (!d.is_mcconnell())
    return {SimplicityStatus::UnknownGeneralCase,
            "some beta_i != 0: no simplicity criterion available for general g_i"};

  std::optional<std::vector<Rational>> dep = q_linear_dependency(d.alpha);
  if (!dep.has_value()) {
    std::string lambdas;
    for (std::size_t i = 0; i < d.alpha.size(); ++i)
      lambdas += (i ? ", " : "") + d.alpha[i].to_string();
    return {SimplicityStatus::SimpleByMcConnell,
            "lambda = (" + lambdas + ") is Q-linearly independent"};
  }

  std::string relation;
  for (std::size_t i = 0; i < dep->size(); ++i) {
    const Rational& c = (*dep)[i];
    if (c.is_zero()) continue;
    if (!relation.empty()) relation += " + ";
    relation += c.to_string() + "*lambda" + std::to_string(i + 1);
  }
  return {SimplicityStatus::NotApplicable,
          "criterion fails: rational dependency " + relation + " = 0"};
}

std::vector<AuditRow> dichotomy_audit(const std::vector<AuditInput>& reports, int n) {
  if (n < 1) throw Error(ErrorKind::Input, "audit requires n >= 1");
  std::vector<AuditRow> out;
  out.reserve(reports.size());
  for (const AuditInput& in : reports) {
    if (!in.degree.has_value())
      throw Error(ErrorKind::UnstableInput,
                  "report '" + in.id + "' has an unstable growth estimate");
    const int d = *in.degree;
    if (d < 0) throw Error(ErrorKind::Input, "negative degree in report '" + in.id + "'");

    AuditRow row;
    row.id = in.id;
    row.degree = d;
    if (d == 1 || d == n) {
      row.verdict = AuditVerdict::ConsistentWithSimple;
      row.justification = "allowed_extreme";
    } else if (d == 0) {
      row.verdict = AuditVerdict::CertifiedNotSimple;
      row.justification = "gk_zero_impossible";
    } else if (d > 1 && d < n) {
      row.verdict = AuditVerdict::CertifiedNotSimple;
      row.justification = "dichotomy_gap";
    } else {
      row.verdict = AuditVerdict::CertifiedNotSimple;
      row.justification = "exceeds_simple_bound";
    }
    if (in.asserted_simple && row.verdict == AuditVerdict::CertifiedNotSimple)
      row.justification += ";contradicts_assertion";
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace gkdim
