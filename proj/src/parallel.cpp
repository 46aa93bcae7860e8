#include "heckeq/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace heckeq {

int thread_count() {
    if (const char* env = std::getenv("THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

template <class T, class F>
T chunked_sum(long n, const F& term, long chunk, bool parallel) {
    if (n <= 0) return T{};
    if (chunk < 1) chunk = 1;
    const long nchunks = (n + chunk - 1) / chunk;
    std::vector<T> partial(static_cast<size_t>(nchunks), T{});

    auto do_chunk = [&](long c) {
        const long lo = c * chunk;
        const long hi = std::min(n, lo + chunk);
        T acc{};
        for (long i = lo; i < hi; ++i) acc += term(i);
        partial[static_cast<size_t>(c)] = acc;
    };

#ifdef _OPENMP
    if (parallel && nchunks > 1 && !omp_in_parallel()) {
        const int nt = thread_count();
#pragma omp parallel for schedule(static) num_threads(nt)
        for (long c = 0; c < nchunks; ++c) do_chunk(c);
    } else {
        for (long c = 0; c < nchunks; ++c) do_chunk(c);
    }
#else
    (void)parallel;
    for (long c = 0; c < nchunks; ++c) do_chunk(c);
#endif

    T total{};
    for (long c = 0; c < nchunks; ++c) total += partial[static_cast<size_t>(c)];
    return total;
}

}  // namespace

double deterministic_sum(long n, const std::function<double(long)>& term, long chunk) {
    return chunked_sum<double>(n, term, chunk, true);
}

cplx deterministic_sum_cplx(long n, const std::function<cplx(long)>& term, long chunk) {
    return chunked_sum<cplx>(n, term, chunk, true);
}

double serial_sum(long n, const std::function<double(long)>& term, long chunk) {
    return chunked_sum<double>(n, term, chunk, false);
}

cplx serial_sum_cplx(long n, const std::function<cplx(long)>& term, long chunk) {
    return chunked_sum<cplx>(n, term, chunk, false);
}

}  // namespace heckeq
