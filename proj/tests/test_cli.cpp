// SPDX-License-Identifier: Apache-2.0
//
// Process-level checks of the gkdim binary: exit codes, deterministic
// outputs, and the machine-parsable error prefix.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef GKDIM_CLI_PATH
#error "GKDIM_CLI_PATH must be defined by the build"
#endif

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch_dir() {
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() / ("gkdim_cli_" + std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

RunResult run_cli(const std::string& args) {
  fs::path dir = scratch_dir();
  fs::path out = dir / "stdout.txt";
  fs::path err = dir / "stderr.txt";
  std::string cmd = std::string(GKDIM_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                    err.string();
  int status = std::system(cmd.c_str());
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return RunResult{code, slurp(out), slurp(err)};
}

fs::path write_file(const std::string& name, const std::string& content) {
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() / ("gkdim_cli_in_" + std::to_string(counter++));
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream f(p);
  f << content;
  return p;
}

const std::string kAlgebraQ2 =
    "field = rationals\nn = 2\nalpha = [\"1\", \"2\"]\nbeta = [\"0\", \"0\"]\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("dims on the free K module") {
  fs::path alg = write_file("a.cfg", kAlgebraQ2);
  fs::path mod = write_file("m.mod", "over = K\nrelations = []\n");
  RunResult r = run_cli("dims --algebra " + alg.string() + " --module " + mod.string() +
                        " --m-max 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "m,dim\n0,1\n1,5\n2,13\n3,25\n");
}

TEST_CASE("gk writes a key-value report into --out") {
  fs::path alg = write_file("a.cfg", kAlgebraQ2);
  fs::path mod = write_file("m.mod", "over = K\nrelations = [\"x1 - 1\"]\n");
  fs::path out = scratch_dir();
  RunResult r = run_cli("gk --algebra " + alg.string() + " --module " + mod.string() +
                        " --m-max 8 --out " + out.string());
  CHECK(r.exit_code == 0);
  std::string report = slurp(out / "gk_report.txt");
  CHECK(report.find("degree = 1") != std::string::npos);
  CHECK(report.find("stable = true") != std::string::npos);
  CHECK(fs::exists(out / "gk_dims.csv"));
}

TEST_CASE("identical inputs give byte-identical reports") {
  fs::path alg = write_file("a.cfg", kAlgebraQ2);
  fs::path mod = write_file("m.mod", "over = K\nrelations = [\"x1*x2 - 1\"]\n");
  RunResult r1 = run_cli("torsion --algebra " + alg.string() + " --module " + mod.string());
  RunResult r2 = run_cli("torsion --algebra " + alg.string() + " --module " + mod.string());
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("\"bg_t\": 1") != std::string::npos);
}

TEST_CASE("input errors exit 2 with the diagnostic prefix") {
  RunResult r = run_cli("dims --algebra /nonexistent.cfg --module /nope.mod --m-max 3");
  CHECK(r.exit_code == 2);
  CHECK(r.err.rfind("gkdim: error: input:", 0) == 0);

  fs::path alg = write_file("a.cfg", kAlgebraQ2);
  fs::path bad = write_file("bad.mod", "over = K\nrelations = [\"x9 - 1\"]\n");
  RunResult r2 =
      run_cli("dims --algebra " + alg.string() + " --module " + bad.string() + " --m-max 3");
  CHECK(r2.exit_code == 2);
  CHECK(r2.err.rfind("gkdim: error: syntax:", 0) == 0);
  CHECK(r2.err.find("\n") == r2.err.size() - 1);  // single line
}

TEST_CASE("resource limits exit 3") {
  fs::path alg = write_file("a.cfg", kAlgebraQ2);
  RunResult r = run_cli("oracle --algebra " + alg.string() + " --m-max 5 --cap 10");
  CHECK(r.exit_code == 3);
  CHECK(r.err.rfind("gkdim: error: resource-limit:", 0) == 0);
}

TEST_CASE("unstable growth exits 4 only under --require-stable") {
  fs::path alg = write_file("a.cfg", kAlgebraQ2);
  fs::path dims = write_file("dims.csv", "m,dim\n0,1\n1,2\n2,4\n3,8\n4,16\n5,32\n6,64\n");
  RunResult soft = run_cli("gk --algebra " + alg.string() + " --dims " + dims.string());
  CHECK(soft.exit_code == 0);
  CHECK(soft.out.find("degree = unstable") != std::string::npos);

  RunResult hard =
      run_cli("gk --algebra " + alg.string() + " --dims " + dims.string() + " --require-stable");
  CHECK(hard.exit_code == 4);
  CHECK(hard.err.rfind("gkdim: error: unstable:", 0) == 0);
}

TEST_CASE("gk validates the depth/window relation") {
  fs::path alg = write_file("a.cfg", kAlgebraQ2);
  fs::path mod = write_file("m.mod", "over = K\nrelations = []\n");
  RunResult r = run_cli("gk --algebra " + alg.string() + " --module " + mod.string() +
                        " --m-max 3 --window 3");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("window + 2") != std::string::npos);
}

TEST_CASE("induce requires a K-module") {
  fs::path alg = write_file("a.cfg", kAlgebraQ2);
  fs::path mod = write_file("m.mod", "over = R\nrelations = []\n");
  RunResult r = run_cli("induce --algebra " + alg.string() + " --module " + mod.string() +
                        " --m-max 4");
  CHECK(r.exit_code == 2);
  CHECK(r.err.rfind("gkdim: error: ambient-mismatch:", 0) == 0);
}

TEST_CASE("audit emits the CSV table") {
  fs::path alg = write_file("a.cfg",
                            "field = rationals\nn = 3\nalpha = [\"1\", \"2\", \"3\"]\nbeta = "
                            "[\"0\", \"0\", \"0\"]\n");
  fs::path rep = write_file("rep.csv", "id,degree,asserted_simple\nm1,2,false\nm2,1,true\n");
  RunResult r = run_cli("audit --algebra " + alg.string() + " --reports " + rep.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "id,degree,verdict,justification\n"
                 "m1,2,CertifiedNotSimple,dichotomy_gap\n"
                 "m2,1,ConsistentWithSimple,allowed_extreme\n");
}

}  // TEST_SUITE
