#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "heckeq/parallel.hpp"
#include "heckeq/types.hpp"

using namespace heckeq;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Node-shaped workload: a Gaussian weight against a rational lattice kernel,
// the same mix of exp and divisions the quadrature grids spend their time on.
double kernel_term(long i) {
    const double u = 2.0e-7 * static_cast<double>(i) - 1.0;
    const double q = u * u + 0.3;
    return std::exp(-PI * u * u) / (q * q);
}

}  // namespace

int main(int argc, char** argv) {
    const long n = argc > 1 ? std::atol(argv[1]) : 20000000L;
    if (n <= 0) {
        std::fprintf(stderr, "usage: bench_kernels [n-terms]\n");
        return 2;
    }
    std::printf("terms   : %ld\n", n);
    std::printf("threads : %d\n", thread_count());

    // one untimed pass to fault in code and warm the core
    volatile double sink = serial_sum(std::min<long>(n, 1000000L), kernel_term);
    (void)sink;

    const auto t0 = std::chrono::steady_clock::now();
    const double ref = serial_sum(n, kernel_term);
    const double t_serial = seconds_since(t0);

    const auto t1 = std::chrono::steady_clock::now();
    const double par = deterministic_sum(n, kernel_term);
    const double t_par = seconds_since(t1);

    std::printf("serial  : %8.3f s   sum = %.17g\n", t_serial, ref);
    std::printf("parallel: %8.3f s   sum = %.17g\n", t_par, par);
    std::printf("speedup : %.2fx\n", t_serial / t_par);

    if (std::memcmp(&ref, &par, sizeof ref) != 0) {
        std::printf("bit-identical: NO\n");
        return 1;
    }
    std::printf("bit-identical: yes\n");
    return 0;
}
