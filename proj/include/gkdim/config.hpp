// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_CONFIG_HPP
#define GKDIM_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include "gkdim/modpres.hpp"
#include "gkdim/simplicity.hpp"
#include "gkdim/torsion.hpp"

namespace gkdim {

/// Structured key = value text with quoted-string lists:
///   field = rational_functions(2)
///   alpha = ["t1", "t2"]
/// '#' starts a comment; lists may span lines until the closing ']'.
class ConfigFile {
public:
  static ConfigFile parse_string(const std::string& text, const std::string& origin);
  static ConfigFile parse_file(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  const std::string& get_string(const std::string& key) const;
  long get_int(const std::string& key) const;
  const std::vector<std::string>& get_list(const std::string& key) const;

private:
  struct Entry {
    int line;
    bool is_list;
    std::string scalar;
    std::vector<std::string> list;
  };
  const Entry& entry(const std::string& key) const;
  std::string origin_;
  std::map<std::string, Entry> values_;
};

/// Algebra configuration: the base field, n, and the derivation literals.
struct AlgebraConfig {
  int trans = 0;  // 0 = rationals, r >= 1 = rational_functions(r)
  int n = 1;
  DerivationSpec der;

  Ambient ambient() const { return Ambient{n, trans}; }
};

AlgebraConfig load_algebra_config(const std::string& path);

/// Module presentation file: `over = K | R` and a relations list in the
/// expression grammar.
ModulePresentation load_module_presentation(const std::string& path, const AlgebraConfig& cfg);

/// As load_module_presentation, restricted to the BaseK case, as an ideal.
LaurentIdealPresentation load_ideal(const std::string& path, const AlgebraConfig& cfg);

/// Audit report rows from CSV with header id,degree,asserted_simple where
/// degree is an integer or "unstable".
std::vector<AuditInput> load_audit_reports(const std::string& path);

}  // namespace gkdim

#endif
