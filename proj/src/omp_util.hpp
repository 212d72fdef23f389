// SPDX-License-Identifier: Apache-2.0
#ifndef GKDIM_SRC_OMP_UTIL_HPP
#define GKDIM_SRC_OMP_UTIL_HPP

#include <cstdint>
#include <exception>

#include "gkdim/echelon.hpp"

namespace gkdim::detail {

/// Run f(i) for i in [0, n). Under Exec::Parallel the iterations run on an
/// OpenMP team; the first exception is captured and rethrown after the join
/// (throwing across a parallel region is undefined behavior).
template <class F>
void omp_for(std::int64_t n, Exec policy, F&& f) {
  if (policy == Exec::Parallel) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        f(i);
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  } else {
    for (std::int64_t i = 0; i < n; ++i) f(i);
  }
}

}  // namespace gkdim::detail

#endif
