#pragma once

#include "heckeq/types.hpp"

namespace heckeq {

// Complex Gamma function. Lanczos approximation on Re z >= 1/2, reflection
// formula elsewhere. Good to at least 12 significant digits for |z| <= 50.
// Throws std::domain_error at non-positive integers, std::overflow_error when
// the magnitude leaves double range.
cplx gamma_complex(cplx z);

// Riemann zeta. Primary scheme: Borwein's accelerated alternating series,
// valid well beyond the strip needed here (0 < Re s <= 60 at 10+ digits).
// Throws std::domain_error at s = 1.
cplx riemann_zeta(cplx s);

// Independent continuation scheme (Euler-Maclaurin with Bernoulli tail).
// Exists so the two continuations can be cross-checked against each other.
cplx riemann_zeta_em(cplx s);

// zeta(s) * pi^(-s/2) * Gamma(s/2); symmetric under s -> 1-s.
// Throws std::domain_error at s = 0 and s = 1.
cplx completed_zeta(cplx s);

// pi^(-s/2) * Gamma(s/2).
cplx archimedean_L_gl1(cplx s);

// Theta constant  sum_{n in Z} exp(i pi tau n^2),  Im tau > 0.
cplx theta_constant(cplx tau, const Precision& prec = {});

// Level-k theta  sum_{n in Z} exp(i pi k tau n^2 + 2 pi i k n z),  Im tau > 0.
cplx theta_level(long k, cplx z, cplx tau, const Precision& prec = {});

// Congruence theta  sum_{n in Z} exp(i pi tau (1+Nn)^2),  Im tau > 0, N > 1.
cplx theta_congruence(long N, cplx tau, const Precision& prec = {});

}  // namespace heckeq
