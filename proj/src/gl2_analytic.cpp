#include "heckeq/gl2_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "heckeq/gl2_arith.hpp"
#include "heckeq/parallel.hpp"

namespace heckeq {

namespace {

void check_point(const IwasawaPoint& p) {
    if (!(p.y > 0.0) || !(p.t > 0.0))
        throw std::domain_error("IwasawaPoint: y and t must be positive");
}

// Re(w) for the convergence checks; the lattice sum needs Re(w) > 1.
double conv_exponent(const SpectralParamGL2& gamma) {
    const double a = gamma.w().real();
    if (!(a > 1.0))
        throw std::domain_error(
            "eisenstein: series requires Re(i(gamma2-gamma1)) > 1");
    return a;
}

// Exact minimum of |u + v tau| over the boundary of the square
// max(|u|, |v|) = 1.  Both horizontal edges reduce to one clamped quadratic
// in u, both vertical edges to one clamped quadratic in v.
double unit_box_edge_min(double x, double y) {
    const double uh = std::clamp(-x, -1.0, 1.0);
    const double horiz = (uh + x) * (uh + x) + y * y;
    const double r2 = x * x + y * y;
    const double vv = std::clamp(-x / r2, -1.0, 1.0);
    const double vert = vv * vv * r2 + 2.0 * vv * x + 1.0;
    return std::sqrt(std::min(horiz, vert));
}

// Every class in ring h (of which there are at most 4h) satisfies
// |m + n tau| >= h * c, so the tail past H is bounded by the integral
// comparison of 4 h^{1-2a}.
double ring_tail(double a, double cmin, double scale, long H) {
    return scale * 4.0 * std::pow(cmin, -2.0 * a) *
           std::pow(static_cast<double>(H), 2.0 - 2.0 * a) / (2.0 * a - 2.0);
}

ValueWithError lattice_sum(const SpectralParamGL2& gamma, const IwasawaPoint& p,
                           const std::vector<CoprimePair>& pairs, long H) {
    const double a = conv_exponent(gamma);
    const cplx w = gamma.w();
    const double ly = std::log(p.y);
    const double x = p.x, y = p.y;
    const cplx sum = deterministic_sum_cplx(
        static_cast<long>(pairs.size()), [&](long i) {
            const double m = static_cast<double>(pairs[i].m);
            const double n = static_cast<double>(pairs[i].n);
            const double q = (m + n * x) * (m + n * x) + n * n * y * y;
            return std::exp(w * (ly - std::log(q)));
        });
    const cplx pref =
        std::exp(cplx(0.0, 1.0) * (gamma.gamma1 + gamma.gamma2) * std::log(p.t));
    const double pref_mag = std::abs(pref);
    const double cmin = unit_box_edge_min(x, y);
    return {pref * sum, ring_tail(a, cmin, pref_mag * std::pow(y, a), H)};
}

}  // namespace

GroupElement2 section(double x, double y, double t) {
    if (!(y > 0.0) || !(t > 0.0))
        throw std::domain_error("section: y and t must be positive");
    const double s = std::sqrt(t / y);
    return {s * y, s * x, 0.0, s};
}

IwasawaPoint iwasawa_coords(const GroupElement2& g) {
    const double det = g.det();
    if (det == 0.0) throw std::domain_error("iwasawa_coords: singular matrix");
    const double m22 = g.c * g.c + g.d * g.d;
    const double m12 = g.a * g.c + g.b * g.d;
    const double t = std::abs(det);
    return {m12 / m22, t / m22, t};
}

double moebius_action(const GroupElement2& g, double x) {
    const double denom = g.a + x * g.c;
    if (denom == 0.0) throw std::domain_error("moebius_action: pole at a + x c = 0");
    return (g.b + x * g.d) / denom;
}

cplx moebius_tau(long a, long b, long c, long d, cplx tau) {
    const cplx denom = static_cast<double>(c) + static_cast<double>(d) * tau;
    if (denom == 0.0) throw std::domain_error("moebius_tau: pole");
    return (static_cast<double>(a) + static_cast<double>(b) * tau) / denom;
}

cplx principal_series_apply(const SpectralParamGL2& gamma, const GroupElement2& g,
                            const std::function<cplx(double)>& f, double x) {
    const double det = g.det();
    if (det == 0.0) throw std::domain_error("principal_series_apply: singular matrix");
    const double denom = g.a + x * g.c;
    if (denom == 0.0)
        throw std::domain_error("principal_series_apply: pole at a + x c = 0");
    const cplx e_det = cplx(0.5, 0.0) + cplx(0.0, 1.0) * gamma.gamma2;
    const cplx e_den = cplx(0.0, 1.0) * (gamma.gamma1 - gamma.gamma2) - 1.0;
    const cplx pref = std::exp(e_det * std::log(std::abs(det)) +
                               e_den * std::log(std::abs(denom)));
    return pref * f((g.b + x * g.d) / denom);
}

cplx spherical_vector(const SpectralParamGL2& gamma, double x) {
    return std::exp(-gamma.w() * std::log1p(x * x));
}

ValueWithError eisenstein(const SpectralParamGL2& gamma, const IwasawaPoint& p, long H) {
    check_point(p);
    if (H < 1) throw std::domain_error("eisenstein: H must be >= 1");
    return lattice_sum(gamma, p, enumerate_coprime_pairs(H), H);
}

ValueWithError eisenstein_full_lattice(const SpectralParamGL2& gamma,
                                       const IwasawaPoint& p, long H) {
    check_point(p);
    if (H < 1) throw std::domain_error("eisenstein_full_lattice: H must be >= 1");
    std::vector<CoprimePair> pairs;
    for (long h = 1; h <= H; ++h) {
        for (long m = -h; m <= h; ++m) pairs.push_back({m, h});
        for (long n = 1; n < h; ++n) pairs.push_back({h, n});
        for (long n = 1; n < h; ++n) pairs.push_back({-h, n});
        pairs.push_back({h, 0});
    }
    return lattice_sum(gamma, p, pairs, H);
}

ValueWithError eisenstein_on_g(const SpectralParamGL2& gamma, const GroupElement2& g,
                               long H) {
    if (H < 1) throw std::domain_error("eisenstein_on_g: H must be >= 1");
    const double det = g.det();
    if (det == 0.0) throw std::domain_error("eisenstein_on_g: singular matrix");
    const double a = conv_exponent(gamma);
    const cplx w = gamma.w();
    const auto pairs = enumerate_coprime_pairs(H);
    const double ga = g.a, gb = g.b, gc = g.c, gd = g.d;
    const cplx sum = deterministic_sum_cplx(
        static_cast<long>(pairs.size()), [&](long i) {
            const double m = static_cast<double>(pairs[i].m);
            const double n = static_cast<double>(pairs[i].n);
            const double u = n * ga + m * gc;
            const double v = n * gb + m * gd;
            return std::exp(-w * std::log(u * u + v * v));
        });
    const cplx e_det = cplx(0.5, 0.0) + cplx(0.0, 1.0) * gamma.gamma2;
    const cplx pref = std::exp(e_det * std::log(std::abs(det)));
    // rows scale at least by the smallest singular value of g, so the ring
    // tail applies with c = sigma_min
    const double tr = ga * ga + gb * gb + gc * gc + gd * gd;
    const double disc = std::sqrt(std::max(0.25 * tr * tr - det * det, 0.0));
    const double smax2 = 0.5 * tr + disc;
    const double smin = std::sqrt(det * det / smax2);
    return {pref * sum, ring_tail(a, smin, std::abs(pref), H)};
}

double invariance_residual(const SpectralParamGL2& gamma, const IwasawaPoint& p,
                           Generator gen, long H) {
    long A = 0, B = 0, C = 0, D = 0;
    switch (gen) {
        case Generator::S: A = 0; B = 1; C = 1; D = 0; break;
        case Generator::T: A = 1; B = 1; C = 0; D = 1; break;
        case Generator::R: A = -1; B = 0; C = 0; D = 1; break;
    }
    const cplx tp = moebius_tau(A, B, C, D, p.tau());
    const IwasawaPoint moved{tp.real(), std::abs(tp.imag()), p.t};
    const cplx lhs = eisenstein(gamma, moved, H).value;
    const cplx rhs = eisenstein(gamma, p, H).value;
    return std::abs(lhs - rhs);
}

}  // namespace heckeq
