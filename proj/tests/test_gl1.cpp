#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "heckeq/gl1.hpp"
#include "heckeq/specfun.hpp"

using namespace heckeq;
using doctest::Approx;

namespace {
const cplx I(0.0, 1.0);
}

TEST_CASE("multiplicative character") {
    CHECK(psi(cplx(0.0, 0.0), 3.7) == cplx(1.0, 0.0));
    CHECK(std::abs(std::abs(psi(cplx(0.7, 0.0), -2.0)) - 1.0) < 1e-15);
    CHECK(std::abs(psi(cplx(0.7, 0.0), 2.0) - psi(cplx(0.7, 0.0), -2.0)) < 1e-15);
    CHECK_THROWS_AS(psi(cplx(0.7, 0.0), 0.0), std::domain_error);
}

TEST_CASE("rescaling operator") {
    const GL1Function f = [](double u) { return cplx(u * u, 0.0); };
    CHECK(hecke_scale(3, 2, f, 1.0).real() == Approx(2.25).epsilon(1e-15));
    CHECK_THROWS_AS(hecke_scale(2, 4, f, 1.0), std::domain_error);
    CHECK_THROWS_AS(hecke_scale(-1, 2, f, 1.0), std::domain_error);
}

TEST_CASE("integer rescaling series has zeta eigenvalues") {
    // sum n^{-s} psi(n x) = zeta(s - i gamma) psi(x)
    SumPolicy pol;
    pol.height = 100000;
    const cplx s(3.0, 0.0), gamma(0.7, 0.0);
    const double x = 0.8;
    const GL1Function f = [&](double u) { return psi(gamma, u); };
    const auto r = q_gl1_Z_apply(s, f, x, pol);
    const cplx want = riemann_zeta(cplx(3.0, -0.7)) * psi(gamma, x);
    CHECK(std::abs(r.value - want) < 1e-8);
    CHECK(std::abs(r.value - want) <= r.error + 1e-12);
}

TEST_CASE("gaussian convolution has gamma-factor eigenvalues") {
    QuadratureSpec spec;
    spec.order = 32;
    spec.subdivisions = 48;
    const double x = 0.8;
    struct Case {
        cplx s, gamma;
    } cases[] = {{cplx(3.0, 0.0), cplx(0.0, 0.0)},
                 {cplx(3.0, 0.0), cplx(0.7, 0.0)},
                 {cplx(2.2, 0.0), cplx(-0.4, 0.0)}};
    for (const auto& c : cases) {
        const GL1Function f = [&](double u) { return psi(c.gamma, u); };
        const cplx got = q_gl1_R_apply(c.s, f, x, spec);
        const cplx want = archimedean_L_gl1(c.s - I * c.gamma) * psi(c.gamma, x);
        CHECK(std::abs(got - want) / std::abs(want) < 1e-9);
    }
    CHECK_THROWS_AS(q_gl1_R_apply(cplx(-0.5, 0.0), [](double) { return cplx(1.0); }, 1.0, spec),
                    std::domain_error);
}

TEST_CASE("theta-kernel convolution has completed-zeta eigenvalues") {
    QuadratureSpec spec;
    spec.order = 32;
    spec.subdivisions = 48;
    const double x = 0.8;
    const GL1Function one = [](double) { return cplx(1.0, 0.0); };
    const cplx got = q_gl1_global_apply(cplx(3.0, 0.0), one, x, spec);
    CHECK(std::abs(got - completed_zeta(cplx(3.0, 0.0))) < 1e-8);

    const cplx gamma(0.7, 0.0);
    const GL1Function f = [&](double u) { return psi(gamma, u); };
    const cplx got2 = q_gl1_global_apply(cplx(3.0, 0.0), f, x, spec);
    const cplx want2 = completed_zeta(cplx(3.0, -0.7)) * psi(gamma, x);
    CHECK(std::abs(got2 - want2) / std::abs(want2) < 1e-8);

    CHECK_THROWS_AS(q_gl1_global_apply(cplx(0.9, 0.0), one, x, spec), std::domain_error);
}

TEST_CASE("theta kernel small-argument branch is continuous") {
    const cplx s(2.0, 0.0);
    // both sides of the 0.04 threshold on x^2, against the direct series
    for (double x : {0.19, 0.21}) {
        const cplx direct =
            0.5 * std::pow(x, s) * (theta_constant(cplx(0.0, x * x)) - 1.0);
        CHECK(std::abs(q_gl1_global_kernel(s, x) - direct) < 1e-13);
    }
    // deep in the folded region the kernel must stay finite and positive
    const cplx tiny = q_gl1_global_kernel(s, 1e-12);
    CHECK(std::isfinite(tiny.real()));
    CHECK(tiny.real() > 0.0);
}

TEST_CASE("kernel functional equation residual is tiny on a grid") {
    for (double sr : {0.2, 0.5, 0.8})
        for (double x : {0.5, 1.0, 1.7})
            CHECK(check_fr2(cplx(sr, 0.0), x) < 1e-13);
}

TEST_CASE("congruence kernel and its archimedean gap") {
    const cplx s(2.0, 0.0);
    const double x = 0.5;
    // the gap is the regrouped difference of the two kernels
    const cplx qhat = q_gl1_congruence_kernel(s, 3, x);
    const double direct =
        std::abs(2.0 * qhat.real() - std::pow(x, 2.0) * std::exp(-PI * x * x));
    const double gap = congruence_archimedean_gap(s, 3, x);
    CHECK(gap == Approx(direct).epsilon(1e-12));
    CHECK(gap == Approx(0.010804352143846369).epsilon(1e-12));
    // deeper congruence levels push the kernels together
    CHECK(congruence_archimedean_gap(s, 10, x) < gap);
    CHECK(congruence_archimedean_gap(s, 30, x) < congruence_archimedean_gap(s, 10, x));
    CHECK_THROWS_AS(q_gl1_congruence_kernel(s, 1, x), std::domain_error);
}
