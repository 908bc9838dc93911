#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cforge {

// Serial runs are the reference implementation; the parallel path must
// produce bit-identical results (each index writes its own slot, reductions
// happen afterwards in index order).
enum class ExecMode { serial, parallel };

template <class Fn>
void for_each_index(std::int64_t count, ExecMode mode, Fn&& fn) {
  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) fn(i);
  } else {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
  }
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace cforge
