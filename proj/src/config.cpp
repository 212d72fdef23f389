// SPDX-License-Identifier: Apache-2.0
#include "gkdim/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gkdim/parse.hpp"

namespace gkdim {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string strip_comment(const std::string& line) {
  bool in_quote = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_quote = !in_quote;
    else if (line[i] == '#' && !in_quote) return line.substr(0, i);
  }
  return line;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw Error(ErrorKind::Input, origin + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> parse_list(const std::string& origin, int line, const std::string& body) {
  std::vector<std::string> items;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
  };
  skip_ws();
  if (i >= body.size() || body[i] != '[') fail(origin, line, "expected '['");
  ++i;
  while (true) {
    skip_ws();
    if (i >= body.size()) fail(origin, line, "unterminated list");
    if (body[i] == ']') {
      ++i;
      break;
    }
    if (body[i] != '"') fail(origin, line, "list items must be quoted strings");
    ++i;
    std::string item;
    while (i < body.size() && body[i] != '"') item += body[i++];
    if (i >= body.size()) fail(origin, line, "unterminated string");
    ++i;
    items.push_back(item);
    skip_ws();
    if (i < body.size() && body[i] == ',') ++i;
  }
  skip_ws();
  if (i != body.size()) fail(origin, line, "trailing text after ']'");
  return items;
}

}  // namespace

ConfigFile ConfigFile::parse_string(const std::string& text, const std::string& origin) {
  ConfigFile cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const int start_line = lineno;
    std::string body = strip(strip_comment(line));
    if (body.empty()) continue;
    std::size_t eq = body.find('=');
    if (eq == std::string::npos) fail(origin, start_line, "expected 'key = value'");
    std::string key = strip(body.substr(0, eq));
    std::string value = strip(body.substr(eq + 1));
    if (key.empty()) fail(origin, start_line, "empty key");
    // Lists may continue on following lines until the closing bracket.
    if (!value.empty() && value.front() == '[') {
      while (value.find(']') == std::string::npos && std::getline(in, line)) {
        ++lineno;
        value += " " + strip(strip_comment(line));
      }
    }
    if (cfg.values_.count(key)) fail(origin, start_line, "duplicate key '" + key + "'");
    Entry e;
    e.line = start_line;
    e.is_list = !value.empty() && value.front() == '[';
    if (e.is_list) e.list = parse_list(origin, start_line, value);
    else e.scalar = value;
    cfg.values_.emplace(std::move(key), std::move(e));
  }
  return cfg;
}

ConfigFile ConfigFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Input, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str(), path);
}

const ConfigFile::Entry& ConfigFile::entry(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end())
    throw Error(ErrorKind::Input, origin_ + ": missing key '" + key + "'");
  return it->second;
}

const std::string& ConfigFile::get_string(const std::string& key) const {
  const Entry& e = entry(key);
  if (e.is_list) throw Error(ErrorKind::Input, origin_ + ": key '" + key + "' is a list");
  return e.scalar;
}

long ConfigFile::get_int(const std::string& key) const {
  const Entry& e = entry(key);
  if (e.is_list) throw Error(ErrorKind::Input, origin_ + ": key '" + key + "' is a list");
  try {
    std::size_t used = 0;
    long v = std::stol(e.scalar, &used);
    if (used != e.scalar.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(origin_, e.line, "key '" + key + "' is not an integer: '" + e.scalar + "'");
  }
}

const std::vector<std::string>& ConfigFile::get_list(const std::string& key) const {
  const Entry& e = entry(key);
  if (!e.is_list)
    throw Error(ErrorKind::Input, origin_ + ": key '" + key + "' is not a list");
  return e.list;
}

AlgebraConfig load_algebra_config(const std::string& path) {
  ConfigFile cfg = ConfigFile::parse_file(path);
  AlgebraConfig out;

  const std::string field = cfg.get_string("field");
  if (field == "rationals") {
    out.trans = 0;
  } else if (field.rfind("rational_functions(", 0) == 0 && field.back() == ')') {
    const std::string inner = field.substr(19, field.size() - 20);
    try {
      out.trans = std::stoi(inner);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Input, path + ": bad field value '" + field + "'");
    }
    if (out.trans < 1)
      throw Error(ErrorKind::Input, path + ": rational_functions(r) needs r >= 1");
  } else {
    throw Error(ErrorKind::Input,
                path + ": field must be 'rationals' or 'rational_functions(r)', got '" +
                    field + "'");
  }

  out.n = static_cast<int>(cfg.get_int("n"));
  if (out.n < 1) throw Error(ErrorKind::Input, path + ": n must be >= 1");

  const std::vector<std::string>& alpha = cfg.get_list("alpha");
  const std::vector<std::string>& beta = cfg.get_list("beta");
  if (static_cast<int>(alpha.size()) != out.n || static_cast<int>(beta.size()) != out.n)
    throw Error(ErrorKind::Input, path + ": alpha and beta must each list n = " +
                                      std::to_string(out.n) + " scalar expressions");

  std::vector<Scalar> a, b;
  for (const std::string& s : alpha) a.push_back(parse_scalar(s, out.trans));
  for (const std::string& s : beta) b.push_back(parse_scalar(s, out.trans));
  out.der = DerivationSpec(std::move(a), std::move(b));
  return out;
}

ModulePresentation load_module_presentation(const std::string& path, const AlgebraConfig& cfg) {
  ConfigFile file = ConfigFile::parse_file(path);
  const std::string over = file.get_string("over");
  std::vector<std::string> texts =
      file.has("relations") ? file.get_list("relations") : std::vector<std::string>{};

  const Ambient amb = cfg.ambient();
  if (over == "K") {
    std::vector<LaurentPoly> rels;
    ParseContext ctx = ParseContext::for_K(amb);
    for (const std::string& s : texts) rels.push_back(parse_laurent(s, ctx));
    return ModulePresentation::over_K(amb, std::move(rels));
  }
  if (over == "R") {
    std::vector<OreElement> rels;
    ParseContext ctx = ParseContext::for_R(amb, cfg.der);
    for (const std::string& s : texts) rels.push_back(parse_element(s, ctx));
    return ModulePresentation::over_R(amb, cfg.der, std::move(rels));
  }
  throw Error(ErrorKind::Input, path + ": over must be 'K' or 'R', got '" + over + "'");
}

LaurentIdealPresentation load_ideal(const std::string& path, const AlgebraConfig& cfg) {
  ModulePresentation p = load_module_presentation(path, cfg);
  if (p.over != OverAlgebra::BaseK)
    throw Error(ErrorKind::Input, path + ": torsion analysis needs a K-module (over = K)");
  return LaurentIdealPresentation::make(p.amb, p.k_relations);
}

std::vector<AuditInput> load_audit_reports(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Input, "cannot open file: " + path);
  std::vector<AuditInput> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip(line);
    if (body.empty()) continue;
    if (lineno == 1 && body.rfind("id,", 0) == 0) continue;  // header
    std::vector<std::string> cells;
    std::istringstream ss(body);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(strip(cell));
    if (cells.size() != 3)
      throw Error(ErrorKind::Input,
                  path + ":" + std::to_string(lineno) + ": expected id,degree,asserted_simple");
    AuditInput row;
    row.id = cells[0];
    if (cells[1] == "unstable") {
      row.degree = std::nullopt;
    } else {
      try {
        row.degree = std::stoi(cells[1]);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Input,
                    path + ":" + std::to_string(lineno) + ": bad degree '" + cells[1] + "'");
      }
    }
    if (cells[2] == "true" || cells[2] == "yes" || cells[2] == "1") row.asserted_simple = true;
    else if (cells[2] == "false" || cells[2] == "no" || cells[2] == "0")
      row.asserted_simple = false;
    else
      throw Error(ErrorKind::Input, path + ":" + std::to_string(lineno) +
                                        ": bad asserted_simple '" + cells[2] + "'");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gkdim
