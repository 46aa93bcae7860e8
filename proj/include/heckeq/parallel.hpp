#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "heckeq/types.hpp"

namespace heckeq {

// Number of worker threads: the THREADS environment variable if set,
// otherwise the OpenMP default (1 in a non-OpenMP build).
int thread_count();

// Deterministic chunked reduction. The index range [0, n) is cut into fixed
// chunks; each chunk is summed serially in index order and the per-chunk
// partials are combined in chunk order. The result is bit-identical for any
// thread count, including a serial build.
double deterministic_sum(long n, const std::function<double(long)>& term, long chunk = 4096);
cplx deterministic_sum_cplx(long n, const std::function<cplx(long)>& term, long chunk = 4096);

// Serial reference implementations with the same chunked association order.
// Kept separate so tests and benchmarks can compare against the parallel path.
double serial_sum(long n, const std::function<double(long)>& term, long chunk = 4096);
cplx serial_sum_cplx(long n, const std::function<cplx(long)>& term, long chunk = 4096);

}  // namespace heckeq
