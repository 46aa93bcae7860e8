#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "heckeq/gl2_operators.hpp"
#include "heckeq/specfun.hpp"

using namespace heckeq;

namespace {

// Reference values below were generated with mpmath at 30 digits.
constexpr double kDetMoment1 = 0.15915494309189534;    // Gamma(2) (2 pi)^-1
constexpr double kDetMoment3 = 0.024188650824899617;   // Gamma(4) (2 pi)^-3
constexpr double kDetMoment45 = 0.013398227843940455;  // Gamma(5.5) (2 pi)^-4.5
constexpr double kEigSeries8 = 2.0140910737209669;     // sum_{n<=8} n^-3.5 lambda_n
constexpr double kEisensteinAtI = 2.7842015453307912;
constexpr double kArchPair32 = 0.14067442439954782;  // pi L(4.5) L(1.5), w = 2 pair at s = 3
constexpr double kEqAllLhs = 0.30953912417651243;    // sum_{n<=50} sigma(n) n^-3 / (2 pi)
constexpr double kZhat3Sq = 0.036600777997600105;
constexpr double kZeta3Zeta2 = 1.9773043502972961;

const SpectralParamGL2 kGammaA{{0.0, 1.5}, {0.0, -1.5}};  // w = 2

QuadratureSpec tensor_spec(int order) {
    QuadratureSpec q;
    q.scheme = QuadratureSpec::Scheme::gauss_hermite_tensor;
    q.order = order;
    return q;
}

double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

// Gamma(beta+1) (2 pi)^-beta, the closed form of the determinant moment.
cplx det_moment_closed(cplx beta) {
    return gamma_complex(beta + 1.0) * std::exp(-beta * std::log(2.0 * PI));
}

// Separated closed form of the unit-row moment: an angular |sin|^beta factor
// and two one-dimensional Gamma-type radial integrals.
cplx unit_moment_closed(cplx beta, cplx w) {
    const cplx sang = 4.0 * std::pow(PI, 1.5) * gamma_complex(0.5 * (beta + 1.0)) /
                      gamma_complex(0.5 * beta + 1.0);
    const cplx iR =
        0.5 * gamma_complex(0.5 * (beta + 2.0)) * std::exp(-0.5 * (beta + 2.0) * std::log(PI));
    const cplx e = beta + 2.0 - 2.0 * w;
    const cplx ir = 0.5 * gamma_complex(0.5 * e) * std::exp(-0.5 * e * std::log(PI));
    return sang * iR * ir;
}

}  // namespace

TEST_CASE("integer matrices act on group elements by multiplication") {
    const Mat2i al{1, 2, 3, 4};
    const GroupElement2 g{5.0, 6.0, 7.0, 8.0};
    const GroupElement2 r = apply_coset(al, g);
    CHECK(r.a == 19.0);
    CHECK(r.b == 22.0);
    CHECK(r.c == 43.0);
    CHECK(r.d == 50.0);
    CHECK(r.det() == doctest::Approx(static_cast<double>(al.det()) * g.det()).epsilon(1e-14));
}

TEST_CASE("closed-form eigenvalues at the cubic divisor point") {
    CHECK(std::abs(lambda_closed_form(1, kGammaA) - cplx(1.0, 0.0)) < 1e-15);
    const double want[] = {4.5, 28.0 / 3.0, 73.0 / 4.0, 126.0 / 5.0, 42.0};
    for (long n = 2; n <= 6; ++n)
        CHECK(std::abs(lambda_closed_form(n, kGammaA) - want[n - 2]) < 1e-13 * want[n - 2]);
    CHECK_THROWS_AS(lambda_closed_form(0, kGammaA), std::domain_error);
}

TEST_CASE("eigenvalue symmetry under parameter swap is bitwise") {
    const SpectralParamGL2 gam{{0.3, 0.4}, {-0.7, 0.2}};
    const SpectralParamGL2 swp{{-0.7, 0.2}, {0.3, 0.4}};
    for (long n : {9L, 12L}) {  // 9 hits the square divisor pair
        const cplx a = lambda_closed_form(n, gam);
        const cplx b = lambda_closed_form(n, swp);
        CHECK(a.real() == b.real());
        CHECK(a.imag() == b.imag());
    }
}

TEST_CASE("averaging operator reproduces the eigenvalues") {
    const IwasawaPoint p{0.3, 1.1, 1.0};

    const auto id = hecke_T_apply(1, kGammaA, p, 200);
    CHECK(id.applied == eisenstein(kGammaA, p, 200).value);
    CHECK(std::abs(id.eigenvalue - cplx(1.0, 0.0)) < 1e-15);

    const auto t2 = hecke_T_apply(2, kGammaA, p, 500);
    CHECK(rel(t2.eigenvalue, cplx(4.5, 0.0)) < 1e-4);
}

TEST_CASE("eigenvalue estimates stay within the truncation budget") {
    const IwasawaPoint p1{0.3, 1.1, 1.0};
    const IwasawaPoint p2{-0.2, 0.8, 1.0};
    const long H = 300;
    const auto base1 = eisenstein(kGammaA, p1, H);
    const auto base2 = eisenstein(kGammaA, p2, H);
    for (long n : {2L, 3L, 5L, 8L, 12L}) {
        const cplx lam = lambda_closed_form(n, kGammaA);
        const auto r1 = hecke_T_apply(n, kGammaA, p1, H);
        const auto r2 = hecke_T_apply(n, kGammaA, p2, H);
        const double b1 = (r1.tail + std::abs(lam) * base1.error) / std::abs(base1.value);
        const double b2 = (r2.tail + std::abs(lam) * base2.error) / std::abs(base2.value);
        CHECK(std::abs(r1.eigenvalue - lam) <= b1);
        CHECK(std::abs(r2.eigenvalue - lam) <= b2);
        CHECK(std::abs(r1.eigenvalue - lam) < 1e-3 * std::abs(lam));
        CHECK(std::abs(r1.eigenvalue - r2.eigenvalue) <= b1 + b2);
    }
}

TEST_CASE("discrete operator factorizes through the averaging operators") {
    const cplx s(2.2, 0.4);
    const IwasawaPoint p{0.3, 1.1, 1.0};
    const long H = 150;

    const auto one = q_gl2_Z_apply(s, kGammaA, p, 1, H);
    CHECK(one.value == eisenstein(kGammaA, p, H).value);

    const auto direct = q_gl2_Z_apply(s, kGammaA, p, 4, H);
    cplx regrouped = 0.0;
    for (long n = 1; n <= 4; ++n) {
        const cplx scale = std::exp(-(s + 0.5) * std::log(static_cast<double>(n)));
        regrouped += scale * hecke_T_apply(n, kGammaA, p, H).applied;
    }
    CHECK(rel(direct.value, regrouped) < 1e-12);
    CHECK_THROWS_AS(q_gl2_Z_apply(s, kGammaA, p, 0, H), std::domain_error);
}

TEST_CASE("discrete operator matches the truncated eigenvalue series") {
    const IwasawaPoint p{0.0, 1.0, 1.0};
    const long H = 400;
    const auto base = eisenstein(kGammaA, p, H);
    const auto z = q_gl2_Z_apply(cplx(3.0, 0.0), kGammaA, p, 8, H);
    const cplx want = kEigSeries8 * base.value;
    CHECK(std::abs(z.value - want) <= z.error + kEigSeries8 * base.error + 1e-9);
    CHECK(rel(z.value, cplx(kEigSeries8 * kEisensteinAtI, 0.0)) < 1e-3);
}

TEST_CASE("gaussian determinant moments") {
    const auto spec = tensor_spec(24);

    // |det|^beta has a kink along det = 0 for odd beta, so the tensor rule
    // converges slowly there: measured 1.1e-3 at beta = 1, 1.5e-4 at beta = 3
    const auto m1 = gaussian_det_moment(cplx(1.0, 0.0), spec);
    CHECK(rel(m1.value, cplx(kDetMoment1, 0.0)) < 2.5e-3);
    CHECK(std::abs(m1.value - kDetMoment1) <= m1.error);

    const auto m3 = gaussian_det_moment(cplx(3.0, 0.0), spec);
    CHECK(rel(m3.value, cplx(kDetMoment3, 0.0)) < 4e-4);
    CHECK(std::abs(m3.value - kDetMoment3) <= m3.error);

    const auto m45 = gaussian_det_moment(cplx(4.5, 0.0), spec);
    CHECK(rel(m45.value, cplx(kDetMoment45, 0.0)) < 1e-4);

    // |det|^2 is a polynomial, so the tensor rule is exact up to the excluded
    // determinant band
    const auto m2 = gaussian_det_moment(cplx(2.0, 0.0), tensor_spec(8));
    CHECK(rel(m2.value, cplx(1.0 / (2.0 * PI * PI), 0.0)) < 1e-7);
    CHECK(std::abs(m2.value - 1.0 / (2.0 * PI * PI)) <= m2.error + 1e-12);

    const cplx bc(1.0, 0.3);
    const auto mc = gaussian_det_moment(bc, spec);
    CHECK(rel(mc.value, det_moment_closed(bc)) < 6e-3);

    CHECK_THROWS_AS(gaussian_det_moment(cplx(-1.0, 0.0), spec), std::domain_error);
    CHECK_THROWS_AS(gaussian_det_moment(cplx(1.0, 0.0), QuadratureSpec{}), std::domain_error);
    CHECK_THROWS_AS(gaussian_det_moment(cplx(1.0, 0.0), tensor_spec(2)), std::domain_error);
}

TEST_CASE("unit row kernel moment against its closed form") {
    const double pts[][2] = {{3.5, 2.0}, {3.0, 2.0}, {4.0, 2.5}, {4.5, 2.5}};
    for (const auto& bw : pts) {
        const cplx got = unit_row_kernel_moment(cplx(bw[0], 0.0), cplx(bw[1], 0.0));
        CHECK(rel(got, unit_moment_closed(bw[0], bw[1])) < 1e-3);
    }

    // w = 0 removes the row factor and the moment collapses to the
    // determinant moment (Legendre duplication of the two Gamma factors)
    const cplx collapsed = unit_row_kernel_moment(cplx(2.3, 0.0), cplx(0.0, 0.0));
    CHECK(rel(collapsed, det_moment_closed(cplx(2.3, 0.0))) < 1e-3);

    CHECK_THROWS_AS(unit_row_kernel_moment(cplx(-0.5, 0.0), cplx(2.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(unit_row_kernel_moment(cplx(1.0, 0.0), cplx(1.5, 0.0)), std::domain_error);
}

TEST_CASE("gaussian convolution operator") {
    const GroupElement2 g = section(0.3, 1.1, 1.0);
    auto one = [](const GroupElement2&) { return cplx(1.0, 0.0); };

    // with f = 1 the convolution is the plain determinant moment, node by node
    const auto conv = q_gl2_R_apply(cplx(3.0, 0.0), one, g, tensor_spec(16));
    const auto mom = gaussian_det_moment(cplx(1.5, 0.0), tensor_spec(16));
    CHECK(conv.value.real() == mom.value.real());
    CHECK(conv.value.imag() == 0.0);
    CHECK(rel(conv.value, det_moment_closed(cplx(1.5, 0.0))) < 2.5e-3);

    // integrable but singular exponent still yields a finite value
    const auto weak = q_gl2_R_apply(cplx(1.0, 0.0), one, g, tensor_spec(8));
    CHECK(std::isfinite(weak.value.real()));

    CHECK_THROWS_AS(q_gl2_R_apply(cplx(0.4, 0.0), one, g, tensor_spec(8)), std::domain_error);
    CHECK_THROWS_AS(q_gl2_R_apply(cplx(3.0, 0.0), one, GroupElement2{1, 2, 2, 4}, tensor_spec(8)),
                    std::domain_error);
    CHECK_THROWS_AS(q_gl2_R_apply(cplx(3.0, 0.0), one, g, QuadratureSpec{}), std::domain_error);
}

TEST_CASE("convolution of the lattice sum via per-class moments") {
    const GroupElement2 g = section(0.3, 1.1, 1.0);
    const cplx s(3.0, 0.0);

    const auto fast = q_gl2_R_apply_eisenstein(s, kGammaA, g, tensor_spec(24), 400);
    const cplx eis = eisenstein_on_g(kGammaA, g, 400).value;
    CHECK(rel(fast.value, kArchPair32 * eis) < 2e-3);

    // the generic-evaluator path agrees at matched low resolution
    auto phi = [](const GroupElement2& X) { return eisenstein_on_g(kGammaA, X, 40).value; };
    const auto slow = q_gl2_R_apply(s, phi, g, tensor_spec(10));
    const auto fast_lo = q_gl2_R_apply_eisenstein(s, kGammaA, g, tensor_spec(10), 40);
    CHECK(rel(slow.value, fast_lo.value) < 5e-2);

    CHECK_THROWS_AS(q_gl2_R_apply_eisenstein(s, SpectralParamGL2{}, g, tensor_spec(8), 40),
                    std::domain_error);
}

TEST_CASE("matrix theta sums") {
    const SymMat2 I2{1.0, 0.0, 1.0};
    const auto one = matrix_theta(I2, I2, 1);
    CHECK(one.value == std::exp(-2.0 * PI));
    CHECK(std::abs(one.value - cplx(0.0018674427317079888, 0.0)) < 1e-17);

    const auto deep = matrix_theta(I2, I2, 30);
    // every coset with det <= 4 written out as exp(-pi (a^2 + b^2 + d^2));
    // the first dropped term is (2,0,3) at det 6 with exponent -13 pi
    const double by_hand = std::exp(-2.0 * PI) + 2.0 * std::exp(-5.0 * PI) +
                           std::exp(-6.0 * PI) + 2.0 * std::exp(-10.0 * PI) +
                           std::exp(-11.0 * PI) + std::exp(-14.0 * PI) +
                           std::exp(-8.0 * PI) + std::exp(-9.0 * PI) +
                           2.0 * std::exp(-17.0 * PI) + std::exp(-18.0 * PI) +
                           std::exp(-21.0 * PI) + std::exp(-26.0 * PI);
    CHECK(std::abs(deep.value - by_hand) < 1e-15);

    const auto shallow = matrix_theta(I2, I2, 3);
    CHECK(std::abs(deep.value - shallow.value) <= shallow.error);
    CHECK(shallow.error < 1e-9);

    // all terms positive, so partial sums grow with the cutoff
    CHECK(matrix_theta(I2, I2, 1).value.real() < matrix_theta(I2, I2, 2).value.real());
    CHECK(matrix_theta(I2, I2, 2).value.real() < matrix_theta(I2, I2, 5).value.real());

    const auto at_id = theta_matrix_alpha(GroupElement2{}, 1);
    CHECK(at_id.value == 1.0 + std::exp(-2.0 * PI));

    CHECK_THROWS_AS(matrix_theta(SymMat2{1.0, 2.0, 1.0}, I2, 5), std::domain_error);
    CHECK_THROWS_AS(matrix_theta(I2, I2, 0), std::domain_error);
}

TEST_CASE("global operator is independent of coset representatives") {
    const GroupElement2 g = section(0.3, 1.1, 1.0);
    const std::vector<Mat2i> canonical = {{1, 0, 0, 2}, {1, 1, 0, 2}, {2, 0, 0, 1}};
    // second representative replaced by its translate under (1 1; 0 1)
    const std::vector<Mat2i> shifted = {{1, 0, 0, 2}, {1, 3, 0, 2}, {2, 0, 0, 1}};
    const auto a = q_gl2_global_apply_mats(cplx(3.0, 0.0), kGammaA, g, canonical,
                                           tensor_spec(16), 200);
    const auto b = q_gl2_global_apply_mats(cplx(3.0, 0.0), kGammaA, g, shifted,
                                           tensor_spec(16), 200);
    CHECK(rel(a.value, b.value) < 1e-3);
}

TEST_CASE("global operator at the identity coset") {
    const GroupElement2 g = section(0.3, 1.1, 1.0);
    const auto r = q_gl2_global_apply(cplx(3.0, 0.0), kGammaA, g, 1, tensor_spec(16), 200);
    const cplx eis = eisenstein_on_g(kGammaA, g, 200).value;
    CHECK(rel(r.value, kArchPair32 * eis) < 5e-3);
    CHECK_THROWS_AS(q_gl2_global_apply(cplx(3.0, 0.0), kGammaA, g, 0, tensor_spec(8), 40),
                    std::domain_error);
}

TEST_CASE("product of completed zetas and its functional equation") {
    const SpectralParamGL2 zero{};
    const cplx s(3.0, 0.0);
    CHECK(std::abs(global_zeta_gl2(s, zero) - completed_zeta(s) * completed_zeta(s)) == 0.0);

    const SpectralParamGL2 gam{{0.3, 0.0}, {-0.2, 0.0}};
    const SpectralParamGL2 neg{{-0.3, 0.0}, {0.2, 0.0}};
    const cplx lhs = global_zeta_gl2(cplx(0.6, 0.0), neg);  // 1 - s at -gamma
    const cplx rhs = global_zeta_gl2(cplx(0.4, 0.0), gam);
    CHECK(std::abs(lhs - rhs) < 1e-8);
}

TEST_CASE("closed integral formula for the squared completed zeta") {
    const auto spec = tensor_spec(24);
    const auto r = verify_eq_ALL(cplx(3.0, 0.0), 50, spec);
    // the lhs quadrature inherits the beta = 1 moment accuracy (about 1.1e-3)
    CHECK(rel(r.lhs, cplx(kEqAllLhs, 0.0)) < 2.5e-3);
    CHECK(std::abs(r.rhs - cplx(kZhat3Sq, 0.0)) < 1e-13);
    CHECK(rel(r.ratio, cplx(kEqAllLhs / kZhat3Sq, 0.0)) < 2.5e-3);

    // undoing the measure constant recovers the coset zeta product within the
    // recorded truncation budget
    CHECK(std::abs(2.0 * PI * r.lhs - kZeta3Zeta2) <= 2.0 * PI * r.error);

    const auto lo = verify_eq_ALL(cplx(3.0, 0.0), 10, spec);
    CHECK(lo.lhs.real() < r.lhs.real());

    const auto unit = verify_eq_ALL(cplx(3.0, 0.0), 1, spec);
    CHECK(rel(unit.lhs, cplx(kDetMoment1, 0.0)) < 2.5e-3);

    CHECK_THROWS_AS(verify_eq_ALL(cplx(1.2, 0.0), 10, spec), std::domain_error);
}
