#include "heckeq/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace heckeq {

namespace {

bool is_nonpositive_integer(cplx z) {
    if (z.imag() != 0.0) return false;
    double r = z.real();
    return r <= 0.0 && r == std::floor(r);
}

// Lanczos coefficients for g = 7, 9 terms.
constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

cplx gamma_lanczos(cplx z) {
    // caller guarantees Re z >= 1/2
    z -= 1.0;
    cplx x = lanczos_c[0];
    for (int i = 1; i < 9; ++i) x += lanczos_c[i] / (z + static_cast<double>(i));
    cplx t = z + lanczos_g + 0.5;
    return std::sqrt(2.0 * PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

cplx gamma_complex(cplx z) {
    if (is_nonpositive_integer(z)) {
        std::ostringstream os;
        os << "gamma_complex: pole at non-positive integer z = " << z.real();
        throw std::domain_error(os.str());
    }
    if (z.real() > 172.0)
        throw std::overflow_error("gamma_complex: |Gamma| exceeds double range");

    cplx g;
    if (z.real() < 0.5) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
        if (1.0 - z.real() > 172.0)
            throw std::overflow_error("gamma_complex: reflection argument out of range");
        g = PI / (std::sin(PI * z) * gamma_lanczos(1.0 - z));
    } else {
        g = gamma_lanczos(z);
    }
    require_finite(g, "gamma_complex");
    return g;
}

namespace {

constexpr int borwein_n = 56;

// d_k = n * sum_{j<=k} (n+j-1)! 4^j / ((n-j)! (2j)!), built once via the term
// ratio t_{j+1}/t_j = 4 (n+j)(n-j) / ((2j+1)(2j+2)), t_0 = 1.
const double* borwein_d() {
    static double d[borwein_n + 1];
    static bool init = false;
    if (!init) {
        double t = 1.0, acc = 1.0;
        d[0] = 1.0;
        for (int j = 0; j + 1 <= borwein_n; ++j) {
            t *= 4.0 * (borwein_n + j) * (borwein_n - j) /
                 ((2.0 * j + 1.0) * (2.0 * j + 2.0));
            acc += t;
            d[j + 1] = acc;
        }
        init = true;
    }
    return d;
}

// Bernoulli numbers B_2 .. B_20
constexpr double bernoulli2k[10] = {
    1.0 / 6.0,      -1.0 / 30.0,     1.0 / 42.0,      -1.0 / 30.0,    5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,      -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0,
};

}  // namespace

cplx riemann_zeta_em(cplx s) {
    if (s == cplx(1.0, 0.0)) throw std::domain_error("riemann_zeta_em: pole at s = 1");
    const int N = 25, K = 10;
    cplx sum = 0.0;
    for (int n = 1; n < N; ++n) sum += std::pow(static_cast<double>(n), -s);
    const double Nd = static_cast<double>(N);
    sum += std::pow(Nd, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(Nd, -s);
    // correction terms B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
    cplx poch = s;              // rising product, starts at s
    double fact = 2.0;          // (2k)!
    cplx npow = std::pow(Nd, -s - 1.0);
    for (int k = 1; k <= K; ++k) {
        sum += bernoulli2k[k - 1] / fact * poch * npow;
        poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        npow /= Nd * Nd;
    }
    require_finite(sum, "riemann_zeta_em");
    return sum;
}

cplx riemann_zeta(cplx s) {
    if (s == cplx(1.0, 0.0)) throw std::domain_error("riemann_zeta: pole at s = 1");
    const cplx denom = 1.0 - std::pow(2.0, 1.0 - s);
    if (std::abs(denom) < 0.05) {
        // near a zero of 1 - 2^(1-s); hand over to the independent scheme
        return riemann_zeta_em(s);
    }
    const double* d = borwein_d();
    cplx sum = 0.0;
    double sign = 1.0;
    for (int k = 0; k < borwein_n; ++k) {
        sum += sign * (d[k] - d[borwein_n]) * std::pow(static_cast<double>(k + 1), -s);
        sign = -sign;
    }
    cplx z = -sum / (d[borwein_n] * denom);
    require_finite(z, "riemann_zeta");
    return z;
}

cplx completed_zeta(cplx s) {
    if (s == cplx(0.0, 0.0) || s == cplx(1.0, 0.0))
        throw std::domain_error("completed_zeta: pole at s = 0 or s = 1");
    return riemann_zeta(s) * std::pow(PI, -s / 2.0) * gamma_complex(s / 2.0);
}

cplx archimedean_L_gl1(cplx s) {
    return std::pow(PI, -s / 2.0) * gamma_complex(s / 2.0);
}

namespace {

void check_upper_half(cplx tau, const char* who) {
    if (!(tau.imag() > 0.0)) {
        std::ostringstream os;
        os << who << ": Im(tau) must be positive, got " << tau.imag();
        throw std::domain_error(os.str());
    }
}

double series_tol(const Precision& prec, double scale) {
    double t = std::max(prec.abs_tol, prec.rel_tol * scale);
    return std::max(t, 1e-17 * scale);
}

}  // namespace

cplx theta_constant(cplx tau, const Precision& prec) {
    check_upper_half(tau, "theta_constant");
    const double y = tau.imag();
    const double tol = series_tol(prec, 1.0);
    long M = static_cast<long>(std::ceil(std::sqrt(std::log(2.0 / tol) / (PI * y)))) + 1;
    if (2 * M + 1 > prec.max_terms)
        throw precision_error("theta_constant: max_terms too small for requested tolerance");
    const cplx iptau = cplx(0.0, 1.0) * PI * tau;
    cplx sum = 1.0;
    for (long n = 1; n <= M; ++n)
        sum += 2.0 * std::exp(iptau * static_cast<double>(n) * static_cast<double>(n));
    require_finite(sum, "theta_constant");
    return sum;
}

cplx theta_level(long k, cplx z, cplx tau, const Precision& prec) {
    check_upper_half(tau, "theta_level");
    if (k < 1) throw std::domain_error("theta_level: k must be a positive integer");
    const double y = tau.imag();
    const double kd = static_cast<double>(k);
    // |term(n)| = exp(-pi k y n^2 - 2 pi k Im(z) n), a Gaussian centered at
    // n0 = -Im(z)/y with peak exp(pi k Im(z)^2 / y)
    const double n0 = -z.imag() / y;
    const double peak_log = PI * kd * z.imag() * z.imag() / y;
    const double tol = series_tol(prec, 1.0);
    long M = static_cast<long>(std::ceil(
                 std::abs(n0) + std::sqrt((std::log(1.0 / tol) + peak_log) / (PI * kd * y)))) +
             2;
    if (2 * M + 1 > prec.max_terms)
        throw precision_error("theta_level: max_terms too small for requested tolerance");
    const cplx a = cplx(0.0, 1.0) * PI * kd * tau;
    const cplx b = cplx(0.0, 2.0) * PI * kd * z;
    cplx sum = 1.0;  // n = 0
    for (long n = 1; n <= M; ++n) {
        const double nd = static_cast<double>(n);
        sum += std::exp(a * nd * nd + b * nd);
        sum += std::exp(a * nd * nd - b * nd);
    }
    require_finite(sum, "theta_level");
    return sum;
}

cplx theta_congruence(long N, cplx tau, const Precision& prec) {
    check_upper_half(tau, "theta_congruence");
    if (N <= 1) throw std::domain_error("theta_congruence: N must be > 1");
    const double y = tau.imag();
    const double tol = series_tol(prec, std::exp(-PI * y));
    long M = static_cast<long>(std::ceil(
                 (1.0 + std::sqrt(std::log(1.0 / std::min(tol, 0.5)) / (PI * y))) /
                 static_cast<double>(N))) +
             2;
    if (2 * M + 1 > prec.max_terms)
        throw precision_error("theta_congruence: max_terms too small for requested tolerance");
    const cplx iptau = cplx(0.0, 1.0) * PI * tau;
    auto term = [&](long n) {
        const double u = 1.0 + static_cast<double>(N) * static_cast<double>(n);
        return std::exp(iptau * u * u);
    };
    cplx sum = term(0);
    for (long n = 1; n <= M; ++n) sum += term(n) + term(-n);
    require_finite(sum, "theta_congruence");
    return sum;
}

}  // namespace heckeq
