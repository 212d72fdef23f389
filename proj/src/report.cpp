// SPDX-License-Identifier: Apache-2.0
#include "gkdim/report.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace gkdim {

std::string dims_to_csv(const DimensionSequence& seq) {
  std::string out = "m,dim\n";
  for (std::size_t m = 0; m < seq.dims.size(); ++m)
    out += std::to_string(m) + "," + std::to_string(seq.dims[m]) + "\n";
  return out;
}

std::string torsion_to_json(const TorsionProfile& profile, const std::string& module_desc) {
  nlohmann::ordered_json j;
  j["module"] = module_desc;
  j["n"] = profile.nvars;
  nlohmann::ordered_json subsets = nlohmann::ordered_json::array();
  for (const auto& [subset, state] : profile.by_subset) {
    nlohmann::ordered_json entry;
    std::vector<int> vars;
    for (int v : subset) vars.push_back(v + 1);
    entry["vars"] = vars;
    entry["torsion"] = state == TorsionState::Torsion;
    subsets.push_back(std::move(entry));
  }
  // Map order is lex; report by (size, lex) to match the profile semantics.
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    const auto& va = a.at("vars");
    const auto& vb = b.at("vars");
    if (va.size() != vb.size()) return va.size() < vb.size();
    return va < vb;
  });
  j["subsets"] = std::move(subsets);
  j["bg_t"] = profile.bg_t;
  return j.dump(2) + "\n";
}

std::string simplicity_to_json(const SimplicityVerdict& verdict) {
  nlohmann::ordered_json j;
  j["status"] = simplicity_status_name(verdict.status);
  j["detail"] = verdict.detail;
  return j.dump(2) + "\n";
}

std::string audit_to_csv(const std::vector<AuditRow>& rows) {
  std::string out = "id,degree,verdict,justification\n";
  for (const AuditRow& r : rows) {
    out += r.id + "," + std::to_string(r.degree) + ",";
    out += r.verdict == AuditVerdict::CertifiedNotSimple ? "CertifiedNotSimple"
                                                         : "ConsistentWithSimple";
    out += "," + r.justification + "\n";
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Input, "cannot write file: " + path);
  out << content;
}

}  // namespace gkdim
