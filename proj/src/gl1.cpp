#include "heckeq/gl1.hpp"

#include <cmath>
#include <numeric>

#include "heckeq/specfun.hpp"

namespace heckeq {

cplx psi(cplx gamma, double x) {
    if (x == 0.0) throw std::domain_error("psi: x must be nonzero");
    return std::pow(std::abs(x), cplx(0.0, 1.0) * gamma);
}

cplx hecke_scale(long p, long q, const GL1Function& f, double x) {
    if (p < 1 || q < 1) throw std::domain_error("hecke_scale: p, q must be positive");
    if (std::gcd(p, q) != 1) throw std::domain_error("hecke_scale: p/q must be reduced");
    return f(static_cast<double>(p) / static_cast<double>(q) * x);
}

ValueWithError q_gl1_Z_apply(cplx s, const GL1Function& f, double x, const SumPolicy& policy) {
    if (x == 0.0) throw std::domain_error("q_gl1_Z_apply: x must be nonzero");
    return truncated_sum(
        [&](long n) { return std::pow(static_cast<double>(n), -s) * f(n * x); }, policy);
}

namespace {

// Both convolutions integrate over R^* = two half-lines; y -> -y folds them
// onto (0, inf) because the kernels are even in y.
cplx halfline_convolution(const std::function<cplx(double)>& kernel, const GL1Function& f,
                          double x, const QuadratureSpec& spec) {
    QuadratureSpec s2 = spec;
    s2.domain_transform = QuadratureSpec::Transform::log_radial;
    auto integrand = [&](double y) { return kernel(y) / y * (f(x / y) + f(-x / y)); };
    return integrate_1d_transformed(integrand, s2).value;
}

}  // namespace

cplx q_gl1_R_apply(cplx s, const GL1Function& f, double x, const QuadratureSpec& spec) {
    if (x == 0.0) throw std::domain_error("q_gl1_R_apply: x must be nonzero");
    if (s.real() <= 0.0) throw std::domain_error("q_gl1_R_apply: need Re(s) > 0");
    auto kernel = [&](double y) { return std::pow(y, s) * std::exp(-PI * y * y); };
    return halfline_convolution(kernel, f, x, spec);
}

cplx q_gl1_global_kernel(cplx s, double x) {
    if (x == 0.0) throw std::domain_error("q_gl1_global_kernel: x must be nonzero");
    // The direct series costs ~1/x terms as x -> 0; below the threshold the
    // reciprocal image Theta(0|i a) = a^{-1/2} Theta(0|i/a) is summed instead.
    const double a = x * x;
    const cplx theta = a >= 0.04 ? theta_constant(cplx(0.0, a))
                                 : theta_constant(cplx(0.0, 1.0 / a)) / std::sqrt(a);
    return 0.5 * std::pow(std::abs(x), s) * (theta - 1.0);
}

cplx q_gl1_global_apply(cplx s, const GL1Function& f, double x, const QuadratureSpec& spec) {
    if (x == 0.0) throw std::domain_error("q_gl1_global_apply: x must be nonzero");
    if (s.real() <= 1.0) throw std::domain_error("q_gl1_global_apply: need Re(s) > 1");
    auto kernel = [&](double y) { return q_gl1_global_kernel(s, y); };
    return halfline_convolution(kernel, f, x, spec);
}

cplx q_gl1_congruence_kernel(cplx s, long N, double x) {
    if (x == 0.0) throw std::domain_error("q_gl1_congruence_kernel: x must be nonzero");
    if (N <= 1) throw std::domain_error("q_gl1_congruence_kernel: N must be > 1");
    return 0.5 * std::pow(std::abs(x), s) * theta_congruence(N, cplx(0.0, x * x));
}

double check_fr2(cplx s, double x) {
    if (x == 0.0) throw std::domain_error("check_fr2: x must be nonzero");
    const double xi = 1.0 / x;
    const cplx lhs = q_gl1_global_kernel(1.0 - s, xi) + 0.5 * std::pow(std::abs(xi), 1.0 - s);
    const cplx rhs = q_gl1_global_kernel(s, x) + 0.5 * std::pow(std::abs(x), s);
    return std::abs(lhs - rhs);
}

double congruence_archimedean_gap(cplx s, long N, double x) {
    if (x == 0.0) throw std::domain_error("congruence_archimedean_gap: x must be nonzero");
    if (N <= 1) throw std::domain_error("congruence_archimedean_gap: N must be > 1");
    const double x2 = x * x;
    double tailsum = 0.0;
    // ascending |n|; terms die so fast that a fixed small range is exact
    for (long n = 1; n <= 64; ++n) {
        const double up = 1.0 + static_cast<double>(N) * static_cast<double>(n);
        const double um = 1.0 - static_cast<double>(N) * static_cast<double>(n);
        tailsum += std::exp(-PI * x2 * up * up) + std::exp(-PI * x2 * um * um);
    }
    return std::abs(std::pow(std::abs(x), s)) * tailsum;
}

}  // namespace heckeq
