// parallel.hpp: Index-parallel map used by every data-parallel loop in the
// library (oracle batches, sweep grids, multi-start searches).
//
// map() runs on OpenMP threads; map_serial() is the reference loop kept for
// testing and benchmarking. Both return results ordered by index, and an
// exception thrown for index i is rethrown after the loop, lowest index first,
// so the two are observably identical for pure callables.

#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qtr::par {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <class F>
using map_result_t = std::invoke_result_t<F&, std::size_t>;

template <class F>
std::vector<map_result_t<F>> map_serial(std::size_t n, F&& f) {
  std::vector<map_result_t<F>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
  return out;
}

template <class F>
std::vector<map_result_t<F>> map(std::size_t n, F&& f) {
  std::vector<map_result_t<F>> out(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = f(idx);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace qtr::par
