#pragma once

#include <functional>
#include <vector>

#include "heckeq/types.hpp"

namespace heckeq {

struct QuadratureSpec {
    enum class Scheme { gauss_legendre_composite, double_exponential, gauss_hermite_tensor };
    enum class Transform { none, log_radial, whole_line };

    Scheme scheme = Scheme::gauss_legendre_composite;
    int order = 16;         // nodes per panel / per dimension
    int subdivisions = 8;   // panels (composite GL) or refinement levels (DE)
    Transform domain_transform = Transform::none;
};

struct SumPolicy {
    enum class TailKind { geometric, power_law, gaussian };

    long height = 1000;
    TailKind tail_bound_kind = TailKind::power_law;
    // optional hard cap on the tail estimate; infinity disables the check
    double abs_tol = std::numeric_limits<double>::infinity();
};

// Gauss-Legendre nodes/weights on [-1, 1] (Golub-Welsch).
void gauss_legendre_nodes(int n, std::vector<double>& x, std::vector<double>& w);

// Gauss-Hermite nodes/weights rescaled to the weight exp(-pi x^2): the rule
// integrates f over the whole line for f decaying like a pi-normalized
// Gaussian, with the Gaussian kept inside f itself.
void gauss_hermite_pi_nodes(int n, std::vector<double>& x, std::vector<double>& w);

// Integral of f over a finite interval [a, b]. Error estimate from comparing
// against a halved-order rule, so doubling `order` shrinks the estimate.
ValueWithError integrate_1d(const std::function<cplx(double)>& f, double a, double b,
                            const QuadratureSpec& spec);

// Integral of f over the whole line (Transform::whole_line), or of f over
// (0, inf) through the substitution y = e^u (Transform::log_radial).
ValueWithError integrate_1d_transformed(const std::function<cplx(double)>& f,
                                        const QuadratureSpec& spec);

// Tensor-product Gauss-Hermite integral of f over R^dim, dim <= 4, for
// integrands with Gaussian decay in every coordinate.
ValueWithError integrate_gauss_nd(const std::function<cplx(const double*)>& f, int dim,
                                  const QuadratureSpec& spec);

// Partial sum of term(1) + ... + term(height) in ascending index order with a
// tail estimate of the declared kind. Throws precision_error if the estimate
// exceeds policy.abs_tol.
ValueWithError truncated_sum(const std::function<cplx(long)>& term, const SumPolicy& policy);

}  // namespace heckeq
