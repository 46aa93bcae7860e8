#pragma once

#include <functional>
#include <vector>

#include "heckeq/gl2_analytic.hpp"
#include "heckeq/gl2_arith.hpp"
#include "heckeq/numerics.hpp"
#include "heckeq/types.hpp"

namespace heckeq {

// Left action of an integer matrix (k l; m n) on a group element.
GroupElement2 apply_coset(const Mat2i& al, const GroupElement2& g);

// Closed-form Hecke eigenvalue n^{1/2} sum_{ad=n} a^{i gamma1} d^{i gamma2}.
// Divisor pairs are visited as {a, d} with a <= d and the two orientations are
// added inside the pair, so swapping gamma1 and gamma2 returns bit-identical
// results.
cplx lambda_closed_form(long n, const SpectralParamGL2& gamma);

struct HeckeApplyResult {
    cplx applied;     // sum over the sigma(n) cosets of Phi at the moved point
    cplx eigenvalue;  // applied / Phi(tau, t)
    double tail;      // accumulated lattice-sum truncation bounds
};

// Averaging operator T_n on the Eisenstein function: each coset (a, b, d)
// moves (tau, t) to ((a tau + b)/d, n t).
HeckeApplyResult hecke_T_apply(long n, const SpectralParamGL2& gamma,
                               const IwasawaPoint& p, long H);

// sum over 1 <= det alpha <= det_cutoff of |det alpha|^{-(s+1/2)} times the
// coset-moved Eisenstein values; regroups as sum_n n^{-(s+1/2)} T_n Phi.
ValueWithError q_gl2_Z_apply(cplx s, const SpectralParamGL2& gamma, const IwasawaPoint& p,
                             long det_cutoff, long H);

// Integral over 2x2 real matrices of |det h|^beta e^{-pi ||h||^2}, computed by
// tensor Gauss-Hermite quadrature with a small excluded band around det h = 0.
// Requires Re(beta) > -1.
ValueWithError gaussian_det_moment(cplx beta, const QuadratureSpec& spec);

// One-class kernel moment at unit row scale: the integral over 2x2 matrices of
// |det h|^beta e^{-pi ||h||^2} ||e adj(h)||^{-2w} for a unit row vector e (the
// value does not depend on the direction of e).  Computed by a product rule in
// singular-value-like coordinates; used as the separated per-class factor.
cplx unit_row_kernel_moment(cplx beta, cplx w);

// Gaussian convolution operator on a general evaluator:
//   integral over 2x2 matrices of |det h|^{s-3/2} e^{-pi ||h||^2} f(g h^{-1}).
// Requires Re(s) > 1/2 and spec.scheme == gauss_hermite_tensor.
ValueWithError q_gl2_R_apply(cplx s, const std::function<cplx(const GroupElement2&)>& f,
                             const GroupElement2& g, const QuadratureSpec& spec);

// Same operator applied to the Eisenstein function of gamma, exploiting the
// term-by-term reduction of the convolution to per-class kernel moments; the
// nearest classes and the far tail use the separated rule, a middle band of
// classes is integrated on the full tensor grid.  H truncates the class sum.
ValueWithError q_gl2_R_apply_eisenstein(cplx s, const SpectralParamGL2& gamma,
                                        const GroupElement2& g, const QuadratureSpec& spec,
                                        long H);

struct SymMat2 {
    double m11 = 1.0, m12 = 0.0, m22 = 1.0;
    double det() const { return m11 * m22 - m12 * m12; }
};

// Matrix theta sum over canonical cosets alpha with det alpha <= det_cutoff of
// exp(-pi Tr(A alpha B alpha^T)), with a Gaussian-in-determinant tail bound.
ValueWithError matrix_theta(const SymMat2& A, const SymMat2& B, long det_cutoff);

// 1 + matrix_theta(I, g g^T, det_cutoff): the theta constant attached to g.
ValueWithError theta_matrix_alpha(const GroupElement2& g, long det_cutoff);

// Global operator: |det g|^{s+1/2} times the coset sum over alpha of the
// matrix-Gaussian convolution with kernel exp(-pi Tr(h^T h alpha g g^T alpha^T))
// applied to the Eisenstein function of gamma.  The error field covers the
// quadrature of the included cosets; callers compare against predictions
// truncated at the same det_cutoff.
ValueWithError q_gl2_global_apply(cplx s, const SpectralParamGL2& gamma,
                                  const GroupElement2& g, long det_cutoff,
                                  const QuadratureSpec& spec, long H);

// Same with an explicit list of integer coset matrices, so tests can replace a
// canonical representative by an SL2(Z)-translate of it.
ValueWithError q_gl2_global_apply_mats(cplx s, const SpectralParamGL2& gamma,
                                       const GroupElement2& g,
                                       const std::vector<Mat2i>& alphas,
                                       const QuadratureSpec& spec, long H);

// Product of completed zetas  zhat(s - i gamma1) zhat(s - i gamma2).
cplx global_zeta_gl2(cplx s, const SpectralParamGL2& gamma);

struct EqAllResult {
    cplx lhs;      // integral of |det g|^s (theta_matrix_alpha(g) - 1) d mu(g)
    cplx rhs;      // zhat(s)^2
    cplx ratio;    // lhs / rhs
    double error;  // quadrature + coset-truncation estimate on lhs
};

// Evaluates both sides of the closed integral formula for zhat(s)^2 at the
// given cutoff.  Requires Re(s) > 3/2.
EqAllResult verify_eq_ALL(cplx s, long det_cutoff, const QuadratureSpec& spec);

}  // namespace heckeq
