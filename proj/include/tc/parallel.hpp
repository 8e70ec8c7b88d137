#pragma once

#include <cstddef>

namespace tc {

// Execution policy for the data-parallel kernels (table building,
// associativity sweeps, product-frontier expansion).  Serial is the
// reference implementation; Parallel uses OpenMP when compiled in and
// must produce bit-identical results.
enum class Exec { Serial, Parallel };

int hardware_threads();

// Runs fn(i) for i in [0, n).  With Exec::Parallel the iterations may run
// concurrently, so fn must not throw and must only write to disjoint slots;
// callers collect per-index results and merge them in index order to stay
// deterministic.
template <typename Fn>
void for_each_index(Exec policy, std::ptrdiff_t n, Fn&& fn) {
#ifdef _OPENMP
  if (policy == Exec::Parallel && n > 1) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
    return;
  }
#endif
  (void)policy;
  for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
}

}  // namespace tc
