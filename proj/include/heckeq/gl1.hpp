#pragma once

#include <functional>

#include "heckeq/numerics.hpp"
#include "heckeq/types.hpp"

namespace heckeq {

using GL1Function = std::function<cplx(double)>;

// Character |x|^{i gamma} on the multiplicative group of nonzero reals.
cplx psi(cplx gamma, double x);

// Lattice rescaling operator: (T_{p/q} f)(x) = f(p/q * x), p, q coprime.
cplx hecke_scale(long p, long q, const GL1Function& f, double x);

// Generating series of the integer rescalings:
// sum_{n >= 1} n^{-s} f(n x), truncated per policy.
ValueWithError q_gl1_Z_apply(cplx s, const GL1Function& f, double x, const SumPolicy& policy);

// Gaussian-kernel convolution on R^*:
// integral over dy/|y| of |y|^s e^{-pi y^2} f(x/y).
cplx q_gl1_R_apply(cplx s, const GL1Function& f, double x, const QuadratureSpec& spec);

// Kernel (|x|^s / 2) (Theta(0 | i x^2) - 1) of the theta-kernel operator.
cplx q_gl1_global_kernel(cplx s, double x);

// Theta-kernel convolution on R^*:
// integral over dy/|y| of (|y|^s / 2)(Theta(0 | i y^2) - 1) f(x/y).
cplx q_gl1_global_apply(cplx s, const GL1Function& f, double x, const QuadratureSpec& spec);

// Congruence-level kernel (|x|^s / 2) Theta^{(N)}(0 | i x^2), N > 1.
// (The operator-level series converges for Re s > 1; the kernel itself is
// defined for every s.)
cplx q_gl1_congruence_kernel(cplx s, long N, double x);

// |Qhat_{1-s}(1/x) + |1/x|^{1-s}/2  -  Qhat_s(x) - |x|^s/2|, the kernel-level
// functional-equation residual; vanishes by theta modularity.
double check_fr2(cplx s, double x);

// sup-norm summand |2 Qhat_{s,N}(x) - Q_s^{R}(x)| evaluated as the exact
// regrouped tail sum |x|^s sum_{n != 0} exp(-pi x^2 (1+Nn)^2); the n = 0
// terms of the two kernels cancel identically, and the naive float
// subtraction underflows to garbage already for moderate N.
double congruence_archimedean_gap(cplx s, long N, double x);

}  // namespace heckeq
