#pragma once

#include <cstddef>
#include <cstdlib>

#ifdef FLOATLAB_HAS_OPENMP
#include <omp.h>
#endif

namespace floatlab {

// Parallel kernels write into preallocated per-index slots; any reduction over
// the slots happens serially afterwards in index order, so results are
// bitwise identical to Exec::Serial regardless of thread count.
enum class Exec { Serial, Parallel };

inline int thread_cap() {
#ifdef FLOATLAB_HAS_OPENMP
  static const int cap = [] {
    if (const char* env = std::getenv("FLOATLAB_THREADS")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return omp_get_max_threads();
  }();
  return cap;
#else
  return 1;
#endif
}

template <class Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
#ifdef FLOATLAB_HAS_OPENMP
  if (exec == Exec::Parallel && thread_cap() > 1) {
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_cap())
    for (long long i = 0; i < count; ++i) {
      fn(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace floatlab
