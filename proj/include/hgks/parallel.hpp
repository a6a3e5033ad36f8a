#pragma once

/// @file parallel.hpp
/// @brief Execution-mode switch for the hot sweeps. Every kernel is written as
///        a body over a flat index range and can run either as a plain serial
///        loop (reference path, used by tests and the benchmark) or under
///        OpenMP. Results are bitwise identical in both modes because kernels
///        only write locations owned by their index and all reductions go
///        through fixed-order tree sums.

#include <cstdint>
#include <span>

namespace hgks {

enum class Exec { serial, openmp };

/// Worker count resolved from HGKS_THREADS (falls back to the OpenMP default).
int worker_count();

/// Apply the resolved worker count to the OpenMP runtime.
void apply_worker_count();

namespace detail {
void omp_for_impl(std::int64_t n, void* ctx, void (*body)(void*, std::int64_t));
}

template <class F>
void parallel_for(std::int64_t n, Exec mode, F&& f) {
  if (mode == Exec::serial) {
    for (std::int64_t i = 0; i < n; ++i) f(i);
    return;
  }
  auto thunk = [](void* ctx, std::int64_t i) { (*static_cast<F*>(ctx))(i); };
  detail::omp_for_impl(n, &f, thunk);
}

/// Deterministic pairwise sum; independent of worker count and chunking.
double tree_sum(std::span<const double> v);

}  // namespace hgks
