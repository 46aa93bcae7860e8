#pragma once

#include <functional>

#include "heckeq/types.hpp"

namespace heckeq {

// Spectral parameter (gamma1, gamma2) of the spherical principal series.
// All convergence statements below are phrased through delta = i(gamma2-gamma1)
// and the half-shifted exponent w = (delta+1)/2.
struct SpectralParamGL2 {
    cplx gamma1{};
    cplx gamma2{};
    cplx delta() const { return cplx(0.0, 1.0) * (gamma2 - gamma1); }
    cplx w() const { return 0.5 * (delta() + 1.0); }
};

// Real 2x2 matrix (a b; c d), assumed invertible where an operation needs it.
struct GroupElement2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
    double det() const { return a * d - b * c; }
};

// Coordinates of the section g(x,y,t) = t^{1/2} y^{-1/2} (y x; 0 1).
struct IwasawaPoint {
    double x = 0.0;
    double y = 1.0;
    double t = 1.0;
    cplx tau() const { return {x, y}; }
};

GroupElement2 section(double x, double y, double t);

// Inverts the section: t = |det g|, and with M = g g^T, y = t / M22,
// x = M12 / M22.  Reconstruction differs from g by a right orthogonal factor.
IwasawaPoint iwasawa_coords(const GroupElement2& g);

// Fractional-linear action g.x = (b + x d) / (a + x c).  This is the
// convention used throughout; it is not the classical (a x + b)/(c x + d).
double moebius_action(const GroupElement2& g, double x);

// Action on the upper half-plane variable, tau -> (a + b tau)/(c + d tau).
cplx moebius_tau(long a, long b, long c, long d, cplx tau);

// Principal series action on an evaluator f:
//   |det g|^{i gamma2 + 1/2} |a + x c|^{i(gamma1-gamma2) - 1} f(g.x).
cplx principal_series_apply(const SpectralParamGL2& gamma, const GroupElement2& g,
                            const std::function<cplx(double)>& f, double x);

// The O2-fixed vector (1 + x^2)^{(i(gamma1-gamma2) - 1)/2}.
cplx spherical_vector(const SpectralParamGL2& gamma, double x);

// Eisenstein function Phi_gamma(tau, t) = t^{i(gamma1+gamma2)} *
// sum over coprime pairs (m, n) mod +-1 of  Im(tau)^w / |m + n tau|^{2w}.
// Truncated at max(|m|, n) <= H; returns the value and a rigorous tail bound.
// Requires Re(delta) > 1.
ValueWithError eisenstein(const SpectralParamGL2& gamma, const IwasawaPoint& p, long H);

// Same sum without the coprimality constraint (all nonzero classes mod +-1).
ValueWithError eisenstein_full_lattice(const SpectralParamGL2& gamma,
                                       const IwasawaPoint& p, long H);

// Matrix form |det g|^{i gamma2 + 1/2} * sum over the same pair classes of
//   ((n a + m c)^2 + (n b + m d)^2)^{(i(gamma1-gamma2) - 1)/2}.
// Agrees with eisenstein(iwasawa_coords(g)) within combined tails.
ValueWithError eisenstein_on_g(const SpectralParamGL2& gamma, const GroupElement2& g,
                               long H);

enum class Generator { S, T, R };

// |Phi(gen.(tau,t)) - Phi(tau,t)| with both sides truncated at H.  The
// generator acts on tau through moebius_tau with S = (0 1; 1 0),
// T = (1 1; 0 1), R = (-1 0; 0 1); the image is folded back to the upper
// half-plane (the lattice sum only sees |Im tau|), and t is untouched.
double invariance_residual(const SpectralParamGL2& gamma, const IwasawaPoint& p,
                           Generator gen, long H);

}  // namespace heckeq
