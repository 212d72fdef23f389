// SPDX-License-Identifier: Apache-2.0
//
// gkdim: batch front end for the exact GK-dimension toolkit. Subcommands
// parse algebra/module files, run the library, and emit CSV / JSON / key-value
// reports. Exit codes: 0 ok, 2 input error, 3 resource limit, 4 unstable
// result under --require-stable.

#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gkdim/config.hpp"
#include "gkdim/report.hpp"

namespace fs = std::filesystem;
using namespace gkdim;

namespace {

struct CommonArgs {
  std::string algebra_path;
  std::string module_path;
  std::string dims_path;
  std::string reports_path;
  std::string out_dir;
  int m_max = -1;
  int window = 3;
  long cap = -1;
  int threads = 0;
  bool require_stable = false;
};

void emit(const CommonArgs& args, const std::string& filename, const std::string& content,
          bool echo_to_stdout) {
  if (!args.out_dir.empty()) {
    fs::create_directories(args.out_dir);
    write_text_file((fs::path(args.out_dir) / filename).string(), content);
    if (echo_to_stdout) std::cout << content;
  } else {
    std::cout << content;
  }
}

DimensionSequence load_dims_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Input, "cannot open file: " + path);
  DimensionSequence seq;
  seq.source = path;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("m,", 0) == 0) continue;
    std::istringstream ss(line);
    std::string mcell, dcell;
    if (!std::getline(ss, mcell, ',') || !std::getline(ss, dcell))
      throw Error(ErrorKind::Input, path + ":" + std::to_string(lineno) + ": expected m,dim");
    try {
      const long m = std::stol(mcell);
      if (m != static_cast<long>(seq.dims.size()))
        throw Error(ErrorKind::Input,
                    path + ":" + std::to_string(lineno) + ": levels must start at 0 and be consecutive");
      seq.dims.push_back(std::stoll(dcell));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(ErrorKind::Input, path + ":" + std::to_string(lineno) + ": bad integer");
    }
  }
  return seq;
}

DimsOptions dims_options(const CommonArgs& args) {
  DimsOptions opts;
  if (args.cap > 0) opts.max_columns = args.cap;
  return opts;
}

int run_dims(const CommonArgs& args) {
  AlgebraConfig cfg = load_algebra_config(args.algebra_path);
  ModulePresentation p = load_module_presentation(args.module_path, cfg);
  DimensionSequence seq = module_filtration_dims(p, args.m_max, dims_options(args));
  emit(args, "dims.csv", dims_to_csv(seq), false);
  return 0;
}

int run_gk(const CommonArgs& args) {
  DimensionSequence seq;
  if (!args.dims_path.empty()) {
    seq = load_dims_csv(args.dims_path);
  } else {
    if (args.module_path.empty())
      throw Error(ErrorKind::Input, "gk needs either --module or --dims");
    int m_max = args.m_max;
    if (m_max < 0) m_max = std::max(2 * args.window + 2, 8);  // default depth
    if (m_max < args.window + 2)
      throw Error(ErrorKind::Input, "gk requires m_max >= window + 2");
    AlgebraConfig cfg = load_algebra_config(args.algebra_path);
    ModulePresentation p = load_module_presentation(args.module_path, cfg);
    seq = module_filtration_dims(p, m_max, dims_options(args));
  }
  GrowthReport report = gk_estimate(seq, args.window);
  emit(args, "gk_report.txt", report.to_kv(), false);
  if (!args.out_dir.empty()) emit(args, "gk_dims.csv", dims_to_csv(seq), false);
  if (args.require_stable && !report.stable()) {
    std::cerr << "gkdim: error: unstable: growth degree did not stabilize for "
              << seq.source << "\n";
    return 4;
  }
  return 0;
}

int run_induce(const CommonArgs& args) {
  AlgebraConfig cfg = load_algebra_config(args.algebra_path);
  ModulePresentation p = load_module_presentation(args.module_path, cfg);
  InducedModule im = induce(p, cfg.der);
  DimensionSequence seq = induced_filtration_dims(im, args.m_max, dims_options(args));
  emit(args, "induced_dims.csv", dims_to_csv(seq), false);
  return 0;
}

int run_oracle(const CommonArgs& args) {
  AlgebraConfig cfg = load_algebra_config(args.algebra_path);
  OracleOptions opts;
  if (args.cap > 0) opts.step_cap = args.cap;
  std::vector<std::int64_t> dims = oracle_dim_sequence(cfg.ambient(), cfg.der, args.m_max, opts);
  DimensionSequence seq;
  seq.dims = std::move(dims);
  seq.source = "oracle";
  emit(args, "oracle.csv", dims_to_csv(seq), false);
  return 0;
}

int run_torsion(const CommonArgs& args) {
  AlgebraConfig cfg = load_algebra_config(args.algebra_path);
  LaurentIdealPresentation ideal = load_ideal(args.module_path, cfg);
  TorsionOptions opts;
  if (args.cap > 0) opts.degree_cap = static_cast<int>(args.cap);
  TorsionProfile profile = brookes_groves_t(ideal, opts);
  emit(args, "torsion.json", torsion_to_json(profile, ideal.describe()), false);
  return 0;
}

int run_simplicity(const CommonArgs& args) {
  AlgebraConfig cfg = load_algebra_config(args.algebra_path);
  SimplicityVerdict verdict = check_simplicity(cfg.der);
  emit(args, "simplicity.json", simplicity_to_json(verdict), false);
  return 0;
}

int run_audit(const CommonArgs& args) {
  AlgebraConfig cfg = load_algebra_config(args.algebra_path);
  std::vector<AuditInput> reports = load_audit_reports(args.reports_path);
  std::vector<AuditRow> rows = dichotomy_audit(reports, cfg.n);
  emit(args, "audit.csv", audit_to_csv(rows), false);
  return 0;
}

int error_exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ResourceLimit: return 3;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gkdim: exact GK-dimension toolkit for Laurent algebras and Ore extensions"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string command;

  auto add_common = [&](CLI::App* cmd, bool needs_module, bool needs_mmax) {
    cmd->add_option("--algebra", args.algebra_path, "algebra config file")->required();
    if (needs_module) cmd->add_option("--module", args.module_path, "module presentation file");
    if (needs_mmax) cmd->add_option("--m-max", args.m_max, "top filtration level");
    cmd->add_option("--out", args.out_dir, "output directory (default: stdout)");
    cmd->add_option("--cap", args.cap, "resource cap (command-specific)");
    cmd->add_option("--threads", args.threads, "OpenMP thread count (0 = default)");
    cmd->callback([&, name = cmd->get_name()] { command = name; });
  };

  CLI::App* dims = app.add_subcommand("dims", "filtration dimension sequence of a module");
  add_common(dims, true, true);
  dims->get_option("--module")->required();
  dims->get_option("--m-max")->required();

  CLI::App* gk = app.add_subcommand("gk", "GK degree estimate via Hilbert fitting");
  add_common(gk, true, true);
  gk->add_option("--dims", args.dims_path, "fit an existing dims CSV instead of a module");
  gk->add_option("--window", args.window, "stabilization window (default 3)");
  gk->add_flag("--require-stable", args.require_stable, "exit 4 when the degree is unstable");

  CLI::App* induce_cmd = app.add_subcommand("induce", "induced-module dimension sequence");
  add_common(induce_cmd, true, true);
  induce_cmd->get_option("--module")->required();
  induce_cmd->get_option("--m-max")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "word-enumeration dimension oracle for R");
  add_common(oracle, false, true);
  oracle->get_option("--m-max")->required();

  CLI::App* torsion = app.add_subcommand("torsion", "Brookes-Groves torsion profile");
  add_common(torsion, true, false);
  torsion->get_option("--module")->required();

  CLI::App* simplicity = app.add_subcommand("simplicity", "McConnell simplicity criterion");
  add_common(simplicity, false, false);

  CLI::App* audit = app.add_subcommand("audit", "dichotomy audit of growth reports");
  add_common(audit, false, false);
  audit->add_option("--reports", args.reports_path, "CSV of id,degree,asserted_simple")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "gkdim: error: input: " << e.what() << "\n";
    return 2;
  }

  if (args.threads > 0) omp_set_num_threads(args.threads);

  try {
    if (command == "dims") return run_dims(args);
    if (command == "gk") return run_gk(args);
    if (command == "induce") return run_induce(args);
    if (command == "oracle") return run_oracle(args);
    if (command == "torsion") return run_torsion(args);
    if (command == "simplicity") return run_simplicity(args);
    if (command == "audit") return run_audit(args);
    std::cerr << "gkdim: error: input: unknown command\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "gkdim: error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return error_exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "gkdim: error: internal: " << e.what() << "\n";
    return 2;
  }
}
