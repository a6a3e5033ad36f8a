#include "hgks/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <vector>

namespace hgks {

int worker_count() {
  if (const char* env = std::getenv("HGKS_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
}

void apply_worker_count() { omp_set_num_threads(worker_count()); }

namespace detail {
void omp_for_impl(std::int64_t n, void* ctx, void (*body)(void*, std::int64_t)) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) body(ctx, i);
}
}  // namespace detail

double tree_sum(std::span<const double> v) {
  // Fixed-topology pairwise reduction: the result depends only on the input
  // order, never on thread count.
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  std::vector<double> buf(v.begin(), v.end());
  std::size_t m = n;
  while (m > 1) {
    const std::size_t half = m / 2;
    for (std::size_t i = 0; i < half; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
    if (m % 2 == 1) {
      buf[half] = buf[m - 1];
      m = half + 1;
    } else {
      m = half;
    }
  }
  return buf[0];
}

}  // namespace hgks
