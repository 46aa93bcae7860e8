#include "heckeq/gl2_operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "heckeq/parallel.hpp"
#include "heckeq/specfun.hpp"

namespace heckeq {

namespace {

struct RowPair {
    double p, q;
};

SymMat2 gram(const GroupElement2& g) {
    return {g.a * g.a + g.b * g.b, g.a * g.c + g.b * g.d, g.c * g.c + g.d * g.d};
}

double smallest_eigenvalue(const SymMat2& m) {
    const double tr = m.m11 + m.m22;
    const double disc = std::sqrt(std::max(tr * tr - 4.0 * m.det(), 0.0));
    return 0.5 * (tr - disc);
}

double smallest_singular_value(const GroupElement2& g) {
    const double tr = g.a * g.a + g.b * g.b + g.c * g.c + g.d * g.d;
    const double det = g.det();
    const double disc = std::sqrt(std::max(0.25 * tr * tr - det * det, 0.0));
    return std::sqrt(det * det / (0.5 * tr + disc));
}

// Lower Cholesky factor of a positive definite 2x2 matrix.
GroupElement2 chol2(const SymMat2& m) {
    if (!(m.m11 > 0.0) || !(m.det() > 0.0))
        throw std::domain_error("chol2: matrix not positive definite");
    const double l11 = std::sqrt(m.m11);
    const double l21 = m.m12 / l11;
    const double l22 = std::sqrt(std::max(m.m22 - l21 * l21, 0.0));
    return {l11, 0.0, l21, l22};
}

// alpha B alpha^T for an integer matrix alpha = (k l; m n).
SymMat2 congruence(const Mat2i& al, const SymMat2& B) {
    const double k = static_cast<double>(al.k), l = static_cast<double>(al.l);
    const double m = static_cast<double>(al.m), n = static_cast<double>(al.n);
    return {k * k * B.m11 + 2.0 * k * l * B.m12 + l * l * B.m22,
            k * m * B.m11 + (k * n + l * m) * B.m12 + l * n * B.m22,
            m * m * B.m11 + 2.0 * m * n * B.m12 + n * n * B.m22};
}

// class pair (m, n) enters the lattice sums through the row (n, m) . X
std::vector<RowPair> transformed_rows(const std::vector<CoprimePair>& cls,
                                      const GroupElement2& X) {
    std::vector<RowPair> rows(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const double m = static_cast<double>(cls[i].m);
        const double n = static_cast<double>(cls[i].n);
        rows[i] = {n * X.a + m * X.c, n * X.b + m * X.d};
    }
    return rows;
}

cplx pow_positive(double base, cplx e) { return std::exp(e * std::log(base)); }

// Product rule for the one-class moment at unit row scale.  In coordinates
// h = R U diag(1, r/R) V with U, V rotations, the integrand splits into a
// radial factor in the small singular direction (substituted r = xi^4 to
// resolve the endpoint power), a Gaussian radial factor in R, and a periodic
// angular factor |sin|^beta handled by an equispaced rule.
cplx adapted_rule(cplx beta, cplx w, int nr, int nR, int nphi) {
    const cplx kappa = beta + 1.0 - 2.0 * w;
    if (!(beta.real() > 0.0))
        throw std::domain_error("unit_row_kernel_moment: requires Re(beta) > 0");
    if (!(kappa.real() > -1.0))
        throw std::domain_error(
            "unit_row_kernel_moment: radial endpoint not integrable (Re(beta+1-2w) <= -1)");
    std::vector<double> x, wt;
    gauss_legendre_nodes(nr, x, wt);
    const double b4 = std::pow(3.0, 0.25);
    cplx Ir = 0.0;
    for (int i = 0; i < nr; ++i) {
        const double xi = 0.5 * b4 * (x[i] + 1.0);
        const double r = xi * xi * xi * xi;
        Ir += 0.5 * b4 * wt[i] * 4.0 * xi * xi * xi *
              std::exp(kappa * std::log(r) - PI * r * r);
    }
    gauss_legendre_nodes(nR, x, wt);
    cplx IR = 0.0;
    for (int i = 0; i < nR; ++i) {
        const double R = 1.5 * (x[i] + 1.0);
        IR += 1.5 * wt[i] * std::exp((beta + 1.0) * std::log(R) - PI * R * R);
    }
    cplx Sang = 0.0;
    for (int k = 0; k < nphi; ++k) {
        const double sn = std::abs(std::sin(2.0 * PI * k / nphi));
        if (sn > 0.0) Sang += std::exp(beta * std::log(sn));
    }
    Sang *= 4.0 * PI * PI / nphi;
    return Sang * Ir * IR;
}

struct CsiOptions {
    int gh_order = 24;
    int top_exact = 16;
    long grid_classes = 512;
    double band_eps = 1e-3;
    int radial = 32;
    int gaussian_radial = 32;
    int angular = 64;
};

struct CsiResult {
    cplx value;
    double error;
};

// Core engine: integral over 2x2 matrices of
//   |det h|^beta e^{-pi ||h||^2} sum_c ||row_c . adj h||^{-2w}.
// Exact rotation homogeneity makes each class term equal to
// |row_c|^{-2w} times the unit-row moment; the engine uses that separated
// form for the nearest classes and the far ones, and integrates a middle
// band of classes on the genuine tensor grid so the result stays anchored
// to a direct 4-D quadrature.  row_scale is a lower bound on |row| per unit
// of the class height, used for the beyond-truncation tail.
CsiResult class_sum_integral(cplx beta, cplx w, const std::vector<RowPair>& rows,
                             double row_scale, long H, const CsiOptions& opt) {
    const long nc = static_cast<long>(rows.size());
    if (nc < 1) throw std::domain_error("class_sum_integral: empty class list");
    const double a = w.real();
    if (!(a > 1.0))
        throw std::domain_error("class_sum_integral: requires Re(w) > 1");

    std::vector<double> rho2(nc);
    for (long i = 0; i < nc; ++i)
        rho2[i] = rows[i].p * rows[i].p + rows[i].q * rows[i].q;
    std::vector<long> order(nc);
    std::iota(order.begin(), order.end(), 0L);
    std::stable_sort(order.begin(), order.end(),
                     [&](long i, long j) { return rho2[i] < rho2[j]; });

    const cplx unit = adapted_rule(beta, w, opt.radial, opt.gaussian_radial, opt.angular);
    const cplx unit_half = adapted_rule(beta, w, opt.radial / 2, opt.gaussian_radial / 2,
                                        opt.angular / 2);

    const long grid_lo = std::min<long>(opt.top_exact, nc);
    const long grid_hi = std::min<long>(grid_lo + opt.grid_classes, nc);

    const bool real_path = beta.imag() == 0.0 && w.imag() == 0.0;
    cplx sep_sum = 0.0;
    double sep_abs = 0.0;
    for (long k = 0; k < nc; ++k) {
        if (k >= grid_lo && k < grid_hi) continue;
        const double r2 = rho2[order[k]];
        if (real_path) {
            const double t = std::pow(r2, -a);
            sep_sum += t;
            sep_abs += t;
        } else {
            const cplx t = std::exp(-w * std::log(r2));
            sep_sum += t;
            sep_abs += std::abs(t);
        }
    }

    cplx grid_full = 0.0;
    double grid_err = 0.0;
    double band_bound = 0.0;
    if (grid_hi > grid_lo) {
        const long ng = grid_hi - grid_lo;
        std::vector<double> pe(ng), qe(ng);
        double grid_abs_rho = 0.0;
        for (long k = grid_lo; k < grid_hi; ++k) {
            pe[k - grid_lo] = rows[order[k]].p;
            qe[k - grid_lo] = rows[order[k]].q;
            grid_abs_rho += std::pow(rho2[order[k]], -a);
        }
        const double br = beta.real(), wr = w.real();
        const int mode = real_path ? (wr == 2.0 ? 0 : (wr == 2.5 ? 1 : 2)) : 3;
        auto grid_eval = [&](int q) -> cplx {
            std::vector<double> gx, gwt;
            gauss_hermite_pi_nodes(q, gx, gwt);
            std::vector<double> gz(q);
            for (int i = 0; i < q; ++i) gz[i] = gwt[i] * std::exp(-PI * gx[i] * gx[i]);
            const long total = static_cast<long>(q) * q * q * q;
            auto node = [&](long idx, double& ha, double& hb, double& hc, double& hd,
                            double& wt4) {
                const long id = idx % q;
                const long ic = (idx / q) % q;
                const long ib = (idx / (static_cast<long>(q) * q)) % q;
                const long ia = idx / (static_cast<long>(q) * q * q);
                ha = gx[ia];
                hb = gx[ib];
                hc = gx[ic];
                hd = gx[id];
                wt4 = gz[ia] * gz[ib] * gz[ic] * gz[id];
            };
            if (mode != 3) {
                return deterministic_sum(total, [&](long idx) {
                    double ha, hb, hc, hd, wt4;
                    node(idx, ha, hb, hc, hd, wt4);
                    const double det = ha * hd - hb * hc;
                    const double ad = std::abs(det);
                    if (ad < opt.band_eps) return 0.0;
                    double acc = 0.0;
                    switch (mode) {
                        case 0:
                            for (long c = 0; c < ng; ++c) {
                                const double u = pe[c] * hd - qe[c] * hc;
                                const double v = qe[c] * ha - pe[c] * hb;
                                const double Q = u * u + v * v;
                                acc += 1.0 / (Q * Q);
                            }
                            break;
                        case 1:
                            for (long c = 0; c < ng; ++c) {
                                const double u = pe[c] * hd - qe[c] * hc;
                                const double v = qe[c] * ha - pe[c] * hb;
                                const double Q = u * u + v * v;
                                acc += 1.0 / (Q * Q * std::sqrt(Q));
                            }
                            break;
                        default:
                            for (long c = 0; c < ng; ++c) {
                                const double u = pe[c] * hd - qe[c] * hc;
                                const double v = qe[c] * ha - pe[c] * hb;
                                acc += std::pow(u * u + v * v, -wr);
                            }
                    }
                    return wt4 * std::pow(ad, br) * acc;
                });
            }
            return deterministic_sum_cplx(total, [&](long idx) -> cplx {
                double ha, hb, hc, hd, wt4;
                node(idx, ha, hb, hc, hd, wt4);
                const double det = ha * hd - hb * hc;
                const double ad = std::abs(det);
                if (ad < opt.band_eps) return 0.0;
                cplx acc = 0.0;
                for (long c = 0; c < ng; ++c) {
                    const double u = pe[c] * hd - qe[c] * hc;
                    const double v = qe[c] * ha - pe[c] * hb;
                    acc += std::exp(-w * std::log(u * u + v * v));
                }
                return wt4 * std::exp(beta * std::log(ad)) * acc;
            });
        };
        grid_full = grid_eval(opt.gh_order);
        const cplx grid_half = grid_eval(std::max(4, opt.gh_order / 2));
        grid_err = std::abs(grid_full - grid_half);
        // excluded determinant band: the separated radial factor puts mass
        // ~ eps^{Re(kappa)+1} below r = eps, spread over the band classes
        const double kr = (beta + 1.0 - 2.0 * w).real();
        band_bound = 2.0 * std::abs(unit) * std::pow(opt.band_eps, kr + 1.0) * grid_abs_rho;
    }

    // classes beyond the enumeration box: at most 4h per ring of height h,
    // each of squared length >= (row_scale * h)^2
    const double far_tail = std::abs(unit) * 4.0 * std::pow(row_scale, -2.0 * a) *
                            std::pow(static_cast<double>(H), 2.0 - 2.0 * a) /
                            (2.0 * a - 2.0);

    CsiResult out;
    out.value = unit * sep_sum + grid_full;
    out.error = grid_err + band_bound + std::abs(unit - unit_half) * sep_abs + far_tail;
    return out;
}

void require_tensor_scheme(const QuadratureSpec& spec, const char* who) {
    if (spec.scheme != QuadratureSpec::Scheme::gauss_hermite_tensor)
        throw std::domain_error(std::string(who) +
                                ": only the gauss_hermite_tensor scheme is supported");
    if (spec.order < 4) throw std::domain_error(std::string(who) + ": order too small");
}

cplx eisenstein_w(const SpectralParamGL2& gamma) {
    const cplx w = gamma.w();
    if (!(w.real() > 1.0))
        throw std::domain_error("gl2 operator: requires Re(i(gamma2-gamma1)) > 1");
    return w;
}

}  // namespace

GroupElement2 apply_coset(const Mat2i& al, const GroupElement2& g) {
    const double k = static_cast<double>(al.k), l = static_cast<double>(al.l);
    const double m = static_cast<double>(al.m), n = static_cast<double>(al.n);
    return {k * g.a + l * g.c, k * g.b + l * g.d, m * g.a + n * g.c, m * g.b + n * g.d};
}

cplx lambda_closed_form(long n, const SpectralParamGL2& gamma) {
    if (n < 1) throw std::domain_error("lambda_closed_form: n must be positive");
    const cplx e1 = cplx(0.0, 1.0) * gamma.gamma1;
    const cplx e2 = cplx(0.0, 1.0) * gamma.gamma2;
    cplx sum = 0.0;
    for (long a = 1; a * a <= n; ++a) {
        if (n % a) continue;
        const long d = n / a;
        const double la = std::log(static_cast<double>(a));
        const double ld = std::log(static_cast<double>(d));
        const cplx t1 = std::exp(e1 * la + e2 * ld);
        if (a == d) {
            sum += t1;
        } else {
            sum += t1 + std::exp(e1 * ld + e2 * la);
        }
    }
    return std::sqrt(static_cast<double>(n)) * sum;
}

HeckeApplyResult hecke_T_apply(long n, const SpectralParamGL2& gamma,
                               const IwasawaPoint& p, long H) {
    const auto cosets = hecke_cosets(n);
    cplx applied = 0.0;
    double tail = 0.0;
    for (const auto& c : cosets) {
        const double a = static_cast<double>(c.a);
        const double b = static_cast<double>(c.b);
        const double d = static_cast<double>(c.d);
        const IwasawaPoint moved{(a * p.x + b) / d, a * p.y / d,
                                 static_cast<double>(n) * p.t};
        const auto v = eisenstein(gamma, moved, H);
        applied += v.value;
        tail += v.error;
    }
    const auto base = eisenstein(gamma, p, H);
    return {applied, applied / base.value, tail};
}

ValueWithError q_gl2_Z_apply(cplx s, const SpectralParamGL2& gamma, const IwasawaPoint& p,
                             long det_cutoff, long H) {
    if (det_cutoff < 1) throw std::domain_error("q_gl2_Z_apply: cutoff must be >= 1");
    cplx total = 0.0;
    double tail = 0.0;
    for (long n = 1; n <= det_cutoff; ++n) {
        const cplx scale = pow_positive(static_cast<double>(n), -(s + 0.5));
        const double mag = std::abs(scale);
        for (const auto& c : hecke_cosets(n)) {
            const double a = static_cast<double>(c.a);
            const double b = static_cast<double>(c.b);
            const double d = static_cast<double>(c.d);
            const IwasawaPoint moved{(a * p.x + b) / d, a * p.y / d,
                                     static_cast<double>(n) * p.t};
            const auto v = eisenstein(gamma, moved, H);
            total += scale * v.value;
            tail += mag * v.error;
        }
    }
    return {total, tail};
}

ValueWithError gaussian_det_moment(cplx beta, const QuadratureSpec& spec) {
    require_tensor_scheme(spec, "gaussian_det_moment");
    if (!(beta.real() > -1.0))
        throw std::domain_error("gaussian_det_moment: requires Re(beta) > -1");
    const double eps = 1e-3;
    const bool real_path = beta.imag() == 0.0;
    const double br = beta.real();
    auto eval = [&](int q) -> cplx {
        std::vector<double> gx, gwt;
        gauss_hermite_pi_nodes(q, gx, gwt);
        std::vector<double> gz(q);
        for (int i = 0; i < q; ++i) gz[i] = gwt[i] * std::exp(-PI * gx[i] * gx[i]);
        const long total = static_cast<long>(q) * q * q * q;
        auto node = [&](long idx, double& det, double& wt4) {
            const long id = idx % q;
            const long ic = (idx / q) % q;
            const long ib = (idx / (static_cast<long>(q) * q)) % q;
            const long ia = idx / (static_cast<long>(q) * q * q);
            det = gx[ia] * gx[id] - gx[ib] * gx[ic];
            wt4 = gz[ia] * gz[ib] * gz[ic] * gz[id];
        };
        if (real_path)
            return deterministic_sum(total, [&](long idx) {
                double det, wt4;
                node(idx, det, wt4);
                const double ad = std::abs(det);
                if (ad < eps) return 0.0;
                return wt4 * std::pow(ad, br);
            });
        return deterministic_sum_cplx(total, [&](long idx) -> cplx {
            double det, wt4;
            node(idx, det, wt4);
            const double ad = std::abs(det);
            if (ad < eps) return 0.0;
            return wt4 * std::exp(beta * std::log(ad));
        });
    };
    const cplx full = eval(spec.order);
    const cplx half = eval(std::max(4, spec.order / 2));
    // the determinant of the unit matrix Gaussian has density pi e^{-2 pi |u|},
    // so the excluded band carries at most 2 pi eps^{Re(beta)+1} / (Re(beta)+1)
    const double band = 2.0 * PI * std::pow(eps, br + 1.0) / (br + 1.0);
    return {full, std::abs(full - half) + band};
}

cplx unit_row_kernel_moment(cplx beta, cplx w) { return adapted_rule(beta, w, 32, 32, 64); }

ValueWithError q_gl2_R_apply(cplx s, const std::function<cplx(const GroupElement2&)>& f,
                             const GroupElement2& g, const QuadratureSpec& spec) {
    require_tensor_scheme(spec, "q_gl2_R_apply");
    if (!(s.real() > 0.5))
        throw std::domain_error("q_gl2_R_apply: requires Re(s) > 1/2");
    if (g.det() == 0.0) throw std::domain_error("q_gl2_R_apply: singular base point");
    const cplx beta = s - 1.5;
    const double br = beta.real();
    const bool real_beta = beta.imag() == 0.0;
    const double eps = 1e-3;
    auto eval = [&](int q) -> cplx {
        std::vector<double> gx, gwt;
        gauss_hermite_pi_nodes(q, gx, gwt);
        std::vector<double> gz(q);
        for (int i = 0; i < q; ++i) gz[i] = gwt[i] * std::exp(-PI * gx[i] * gx[i]);
        const long total = static_cast<long>(q) * q * q * q;
        return deterministic_sum_cplx(total, [&](long idx) -> cplx {
            const long id = idx % q;
            const long ic = (idx / q) % q;
            const long ib = (idx / (static_cast<long>(q) * q)) % q;
            const long ia = idx / (static_cast<long>(q) * q * q);
            const double ha = gx[ia], hb = gx[ib], hc = gx[ic], hd = gx[id];
            const double det = ha * hd - hb * hc;
            const double ad = std::abs(det);
            if (ad < eps) return 0.0;
            const GroupElement2 arg{(g.a * hd - g.b * hc) / det, (g.b * ha - g.a * hb) / det,
                                    (g.c * hd - g.d * hc) / det, (g.d * ha - g.c * hb) / det};
            const double wt4 = gz[ia] * gz[ib] * gz[ic] * gz[id];
            const cplx base =
                real_beta ? cplx(std::pow(ad, br), 0.0) : std::exp(beta * std::log(ad));
            return wt4 * base * f(arg);
        });
    };
    const cplx full = eval(spec.order);
    const cplx half = eval(std::max(4, spec.order / 2));
    // band estimate scales with |f| near the base point; the determinant
    // density bound pi covers the measure of the band itself
    const double fscale = std::abs(f(g));
    const double band =
        2.0 * PI * std::pow(eps, br + 1.0) / (br + 1.0) * (1.0 + std::abs(std::log(eps))) * fscale;
    return {full, std::abs(full - half) + band};
}

ValueWithError q_gl2_R_apply_eisenstein(cplx s, const SpectralParamGL2& gamma,
                                        const GroupElement2& g, const QuadratureSpec& spec,
                                        long H) {
    require_tensor_scheme(spec, "q_gl2_R_apply_eisenstein");
    const cplx w = eisenstein_w(gamma);
    if (g.det() == 0.0)
        throw std::domain_error("q_gl2_R_apply_eisenstein: singular base point");
    const cplx beta = s - 1.0 - cplx(0.0, 1.0) * gamma.gamma1;
    const auto cls = enumerate_coprime_pairs(H);
    CsiOptions opt;
    opt.gh_order = spec.order;
    const auto r =
        class_sum_integral(beta, w, transformed_rows(cls, g), smallest_singular_value(g), H, opt);
    const cplx pref =
        pow_positive(std::abs(g.det()), cplx(0.5, 0.0) + cplx(0.0, 1.0) * gamma.gamma2);
    return {pref * r.value, std::abs(pref) * r.error};
}

ValueWithError matrix_theta(const SymMat2& A, const SymMat2& B, long det_cutoff) {
    if (det_cutoff < 1) throw std::domain_error("matrix_theta: cutoff must be >= 1");
    if (!(A.m11 > 0.0) || !(A.det() > 0.0) || !(B.m11 > 0.0) || !(B.det() > 0.0))
        throw std::domain_error("matrix_theta: inputs must be positive definite");
    double total = 0.0;
    for (long n = 1; n <= det_cutoff; ++n) {
        for (const auto& c : hecke_cosets(n)) {
            const double a = static_cast<double>(c.a);
            const double b = static_cast<double>(c.b);
            const double d = static_cast<double>(c.d);
            const double M11 = a * a * B.m11 + 2.0 * a * b * B.m12 + b * b * B.m22;
            const double M12 = d * (a * B.m12 + b * B.m22);
            const double M22 = d * d * B.m22;
            const double tr = A.m11 * M11 + 2.0 * A.m12 * M12 + A.m22 * M22;
            total += std::exp(-PI * tr);
        }
    }
    // Tr(A alpha B alpha^T) >= lmin(A) lmin(B) ||alpha||^2 >= 2 lmin lmin det,
    // so the tail decays at least like sigma(n) e^{-c n}
    const double c = 2.0 * PI * smallest_eigenvalue(A) * smallest_eigenvalue(B);
    double tail = 0.0;
    bool bounded = false;
    long n = det_cutoff + 1;
    for (; n <= det_cutoff + 400; ++n) {
        const double term =
            static_cast<double>(n) * (1.0 + std::log(static_cast<double>(n))) * std::exp(-c * n);
        tail += term;
        if (term < 1e-300) {
            bounded = true;
            break;
        }
    }
    if (!bounded) {
        const double nn = static_cast<double>(n);
        const double last = nn * (1.0 + std::log(nn)) * std::exp(-c * nn);
        const double ratio =
            std::exp(-c) * ((nn + 1.0) / nn) * ((1.0 + std::log(nn + 1.0)) / (1.0 + std::log(nn)));
        if (ratio < 1.0) {
            tail += last / (1.0 - ratio);
            bounded = true;
        }
    }
    if (!bounded) tail = std::numeric_limits<double>::infinity();
    return {total, tail};
}

ValueWithError theta_matrix_alpha(const GroupElement2& g, long det_cutoff) {
    const auto v = matrix_theta({1.0, 0.0, 1.0}, gram(g), det_cutoff);
    return {1.0 + v.value, v.error};
}

ValueWithError q_gl2_global_apply_mats(cplx s, const SpectralParamGL2& gamma,
                                       const GroupElement2& g,
                                       const std::vector<Mat2i>& alphas,
                                       const QuadratureSpec& spec, long H) {
    require_tensor_scheme(spec, "q_gl2_global_apply");
    const cplx w = eisenstein_w(gamma);
    const double detg = std::abs(g.det());
    if (detg == 0.0) throw std::domain_error("q_gl2_global_apply: singular base point");
    const cplx beta = s - 1.0 - cplx(0.0, 1.0) * gamma.gamma1;
    const auto cls = enumerate_coprime_pairs(H);
    const SymMat2 B0 = gram(g);
    CsiOptions opt;
    opt.gh_order = spec.order;
    cplx total = 0.0;
    double err = 0.0;
    for (const auto& al : alphas) {
        const long nd = al.det();
        if (nd == 0) throw std::domain_error("q_gl2_global_apply: singular coset matrix");
        const double n = std::abs(static_cast<double>(nd));
        const GroupElement2 L = chol2(congruence(al, B0));
        const auto r = class_sum_integral(beta, w, transformed_rows(cls, L),
                                          smallest_singular_value(L), H, opt);
        // |det L| = n |det g|; the change of variables h -> h L^{-T} turns the
        // kernel exp(-pi Tr(h^T h L L^T)) term into this scaled class integral
        const cplx fac = pow_positive(n * detg, 2.0 * w - 2.0 - beta);
        total += fac * r.value;
        err += std::abs(fac) * r.error;
    }
    const cplx pref = pow_positive(detg, s + 0.5);
    return {pref * total, std::abs(pref) * err};
}

ValueWithError q_gl2_global_apply(cplx s, const SpectralParamGL2& gamma,
                                  const GroupElement2& g, long det_cutoff,
                                  const QuadratureSpec& spec, long H) {
    if (det_cutoff < 1) throw std::domain_error("q_gl2_global_apply: cutoff must be >= 1");
    std::vector<Mat2i> alphas;
    for (long n = 1; n <= det_cutoff; ++n)
        for (const auto& c : hecke_cosets(n)) alphas.push_back({c.a, c.b, 0, c.d});
    return q_gl2_global_apply_mats(s, gamma, g, alphas, spec, H);
}

cplx global_zeta_gl2(cplx s, const SpectralParamGL2& gamma) {
    const cplx i{0.0, 1.0};
    return completed_zeta(s - i * gamma.gamma1) * completed_zeta(s - i * gamma.gamma2);
}

EqAllResult verify_eq_ALL(cplx s, long det_cutoff, const QuadratureSpec& spec) {
    if (!(s.real() > 1.5)) throw std::domain_error("verify_eq_ALL: requires Re(s) > 3/2");
    if (det_cutoff < 1) throw std::domain_error("verify_eq_ALL: cutoff must be >= 1");
    // substituting g -> alpha^{-1} g maps each coset term of the theta kernel
    // onto the same determinant moment weighted by (det alpha)^{-s}, exactly
    const auto mom = gaussian_det_moment(s - 2.0, spec);
    cplx S = 0.0;
    for (long n = 1; n <= det_cutoff; ++n)
        S += static_cast<double>(sigma(n)) * pow_positive(static_cast<double>(n), -s);
    double coset_tail = std::numeric_limits<double>::infinity();
    const double x = s.real();
    if (x > 2.0) {
        const double C = static_cast<double>(det_cutoff);
        const double q = x - 2.0;
        coset_tail = std::pow(C, -q) * ((1.0 + std::log(C)) / q + 1.0 / (q * q));
    }
    EqAllResult out;
    out.lhs = S * mom.value;
    out.rhs = completed_zeta(s) * completed_zeta(s);
    out.ratio = out.lhs / out.rhs;
    out.error = std::abs(S) * mom.error + std::abs(mom.value) * coset_tail;
    return out;
}

}  // namespace heckeq
