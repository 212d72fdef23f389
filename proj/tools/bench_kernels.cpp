// SPDX-License-Identifier: Apache-2.0
//
// Kernel benchmark: serial reference vs OpenMP variants of the exact-rank
// echelon insertion, oracle word reduction, and module-dims pipelines.
// Results must agree bit for bit; this tool reports wall times and checks
// the agreement on every run.

#include <omp.h>

#include <cstdio>
#include <random>
#include <vector>

#include "gkdim/basis.hpp"
#include "gkdim/modpres.hpp"
#include "gkdim/ore.hpp"

using namespace gkdim;

namespace {

/// Rows drawn from a fixed low-rank span, the profile the rank kernel sees
/// in practice (many rows, most reducing to zero against a modest pivot
/// set). Unstructured dense random matrices are avoided on purpose: exact
/// elimination fills in and the rational entries balloon.
std::vector<SparseVec> low_rank_rows(int rows, int cols, int rank, std::mt19937& rng) {
  std::uniform_int_distribution<int> col_dist(0, cols - 1);
  std::uniform_int_distribution<long> val_dist(-3, 3);
  std::uniform_int_distribution<int> base_dist(0, rank - 1);

  auto make_row = [&](int nnz) {
    std::map<int, long> entries;
    for (int k = 0; k < nnz; ++k) {
      long v = val_dist(rng);
      if (v == 0) v = 1;
      entries[col_dist(rng)] += v;
    }
    SparseVec vec;
    for (auto& [c, v] : entries)
      if (v != 0) vec.entries.emplace_back(c, Scalar::integer(v, 0));
    return vec;
  };

  std::vector<SparseVec> base;
  base.reserve(rank);
  for (int i = 0; i < rank; ++i) base.push_back(make_row(4));

  std::vector<SparseVec> out;
  out.reserve(rows);
  for (int r = 0; r < rows; ++r) {
    SparseVec row;
    for (int k = 0; k < 3; ++k) {
      long c = val_dist(rng);
      if (c == 0) c = 1;
      row = sv_axpy(row, Scalar::integer(c, 0), base[base_dist(rng)]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

double time_rank(const std::vector<SparseVec>& rows, Exec policy, std::int64_t* rank_out) {
  double t0 = omp_get_wtime();
  EchelonBasis basis(0);
  basis.insert_batch(rows, policy);
  *rank_out = basis.rank();
  return omp_get_wtime() - t0;
}

void bench_rank() {
  std::mt19937 rng(20240811);
  auto rows = low_rank_rows(4000, 500, 60, rng);
  std::int64_t rank_serial = 0, rank_parallel = 0;
  double ts = time_rank(rows, Exec::Serial, &rank_serial);
  double tp = time_rank(rows, Exec::Parallel, &rank_parallel);
  std::printf("echelon-rank     4000x500  serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
              ts, tp, ts / tp, rank_serial == rank_parallel ? "agree" : "MISMATCH");
}

void bench_oracle() {
  Ambient amb{2, 2};
  DerivationSpec der = DerivationSpec::mcconnell_generic(2);
  OracleOptions serial{100'000'000, Exec::Serial};
  OracleOptions parallel{100'000'000, Exec::Parallel};
  double t0 = omp_get_wtime();
  auto ds = oracle_dim_sequence(amb, der, 6, serial);
  double ts = omp_get_wtime() - t0;
  t0 = omp_get_wtime();
  auto dp = oracle_dim_sequence(amb, der, 6, parallel);
  double tp = omp_get_wtime() - t0;
  std::printf("oracle n=2 m=6   words     serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
              ts, tp, ts / tp, ds == dp ? "agree" : "MISMATCH");
}

void bench_module_dims() {
  Ambient amb{3, 0};
  std::vector<LaurentPoly> rels{
      LaurentPoly::variable(amb, 0, 1) - LaurentPoly::one(amb),
      LaurentPoly::variable(amb, 1, 1) * LaurentPoly::variable(amb, 2, 1) -
          LaurentPoly::one(amb)};
  ModulePresentation p = ModulePresentation::over_K(amb, rels);

  DimsOptions serial;
  serial.policy = Exec::Serial;
  DimsOptions parallel;
  parallel.policy = Exec::Parallel;

  double t0 = omp_get_wtime();
  auto ds = module_filtration_dims(p, 10, serial);
  double ts = omp_get_wtime() - t0;
  t0 = omp_get_wtime();
  auto dp = module_filtration_dims(p, 10, parallel);
  double tp = omp_get_wtime() - t0;
  t0 = omp_get_wtime();
  auto dref = module_filtration_dims_reference(p, 10, serial);
  double tr = omp_get_wtime() - t0;
  const bool agree = ds.dims == dp.dims && ds.dims == dref.dims;
  std::printf(
      "module-dims m=10 K3/<x1-1, x2*x3-1> serial %.3fs  parallel %.3fs  reference %.3fs  %s\n",
      ts, tp, tr, agree ? "agree" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  bench_rank();
  bench_oracle();
  bench_module_dims();
  return 0;
}
