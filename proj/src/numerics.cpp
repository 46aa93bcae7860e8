#include "heckeq/numerics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>

#include "heckeq/parallel.hpp"

namespace heckeq {

namespace {

using NodeSet = std::pair<std::vector<double>, std::vector<double>>;

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the recurrence,
// weights come from the first components of the eigenvectors.
NodeSet golub_welsch(int n, const std::function<double(int)>& offdiag, double mu0) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = offdiag(k);
        J(k - 1, k) = b;
        J(k, k - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    NodeSet out;
    out.first.resize(n);
    out.second.resize(n);
    for (int i = 0; i < n; ++i) {
        out.first[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        out.second[i] = mu0 * v0 * v0;
    }
    return out;
}

std::mutex node_cache_mutex;

const NodeSet& legendre_cached(int n) {
    static std::map<int, NodeSet> cache;
    std::lock_guard<std::mutex> lock(node_cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto ns = golub_welsch(
            n, [](int k) { return k / std::sqrt(4.0 * k * k - 1.0); }, 2.0);
        it = cache.emplace(n, std::move(ns)).first;
    }
    return it->second;
}

const NodeSet& hermite_pi_cached(int n) {
    static std::map<int, NodeSet> cache;
    std::lock_guard<std::mutex> lock(node_cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto ns = golub_welsch(
            n, [](int k) { return std::sqrt(0.5 * k); }, std::sqrt(PI));
        // rescale weight exp(-t^2) -> exp(-pi x^2): x = t/sqrt(pi),
        // W = w * exp(t^2) / sqrt(pi)
        const double rpi = std::sqrt(PI);
        for (int i = 0; i < n; ++i) {
            const double t = ns.first[i];
            ns.second[i] *= std::exp(t * t) / rpi;
            ns.first[i] = t / rpi;
        }
        it = cache.emplace(n, std::move(ns)).first;
    }
    return it->second;
}

void check_order(const QuadratureSpec& spec) {
    if (spec.order < 2) throw std::domain_error("QuadratureSpec: order must be >= 2");
    if (spec.subdivisions < 1) throw std::domain_error("QuadratureSpec: subdivisions must be >= 1");
}

cplx gl_composite(const std::function<cplx(double)>& f, double a, double b, int order,
                  int panels) {
    const auto& [x, w] = legendre_cached(order);
    const double hw = (b - a) / panels;
    cplx total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * hw;
        const double mid = lo + 0.5 * hw;
        cplx acc = 0.0;
        for (int i = 0; i < order; ++i) acc += w[i] * f(mid + 0.5 * hw * x[i]);
        total += 0.5 * hw * acc;
    }
    return total;
}

// tanh-sinh on [a, b]; `levels` trapezoid refinements of step h = 1.
// The abscissa is formed as an offset from the nearer endpoint. Writing
// mid + half*tanh(u) instead loses the offset to rounding once tanh
// saturates, which caps the accuracy near an endpoint singularity.
cplx de_finite(const std::function<cplx(double)>& f, double a, double b, int levels,
               cplx* prev_out) {
    const double tmax = 3.9;
    const double half = 0.5 * (b - a);
    auto sample = [&](double t) -> cplx {
        const double u = 0.5 * PI * std::sinh(t);
        const double c = std::cosh(u);
        const double w = half * 0.5 * PI * std::cosh(t) / (c * c);
        // half*(1 - tanh|u|) without cancellation
        const double del = half * 2.0 / (1.0 + std::exp(2.0 * std::abs(u)));
        const double x = t < 0.0 ? a + del : b - del;
        if (!(w > 0.0) || !(x > a) || !(x < b)) return cplx(0.0, 0.0);
        return w * f(x);
    };
    cplx prev = 0.0, cur = 0.0;
    for (int L = 0; L < levels; ++L) {
        const double h = 1.0 / static_cast<double>(1 << L);
        const long M = static_cast<long>(tmax / h);
        cplx acc = 0.0;
        if (L == 0) {
            for (long k = -M; k <= M; ++k) acc += sample(k * h);
            cur = h * acc;
        } else {
            // new points only: odd multiples of h
            for (long k = -M; k <= M; ++k)
                if (k % 2 != 0) acc += sample(k * h);
            prev = cur;
            cur = 0.5 * cur + h * acc;
        }
    }
    if (prev_out) *prev_out = prev;
    return cur;
}

}  // namespace

void gauss_legendre_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
    const auto& ns = legendre_cached(n);
    x = ns.first;
    w = ns.second;
}

void gauss_hermite_pi_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
    const auto& ns = hermite_pi_cached(n);
    x = ns.first;
    w = ns.second;
}

ValueWithError integrate_1d(const std::function<cplx(double)>& f, double a, double b,
                            const QuadratureSpec& spec) {
    check_order(spec);
    if (!(b > a)) throw std::domain_error("integrate_1d: need b > a");
    switch (spec.scheme) {
        case QuadratureSpec::Scheme::gauss_legendre_composite: {
            const cplx v = gl_composite(f, a, b, spec.order, spec.subdivisions);
            const int half = std::max(2, spec.order / 2);
            const cplx vref = gl_composite(f, a, b, half, spec.subdivisions);
            require_finite(v, "integrate_1d");
            return {v, std::abs(v - vref)};
        }
        case QuadratureSpec::Scheme::double_exponential: {
            const int levels = std::min(12, std::max(3, spec.subdivisions));
            cplx prev;
            const cplx v = de_finite(f, a, b, levels, &prev);
            require_finite(v, "integrate_1d");
            return {v, std::abs(v - prev)};
        }
        case QuadratureSpec::Scheme::gauss_hermite_tensor:
            throw std::domain_error(
                "integrate_1d: gauss_hermite_tensor applies to whole-line integrands");
    }
    throw std::domain_error("integrate_1d: unknown scheme");
}

ValueWithError integrate_1d_transformed(const std::function<cplx(double)>& f,
                                        const QuadratureSpec& spec) {
    check_order(spec);
    switch (spec.domain_transform) {
        case QuadratureSpec::Transform::log_radial: {
            // y = e^u maps (0, inf) to the line; the window covers integrands
            // with power-law behavior at 0 and (super-)exponential decay at
            // infinity, the regime of every Mellin-Gaussian integral here.
            auto g = [&](double u) {
                const double y = std::exp(u);
                return f(y) * y;
            };
            const double lo = -80.0, hi = 6.0;
            const int panels = std::max(spec.subdivisions, 40);
            const cplx v = gl_composite(g, lo, hi, spec.order, panels);
            const int half = std::max(2, spec.order / 2);
            const cplx vref = gl_composite(g, lo, hi, half, panels);
            require_finite(v, "integrate_1d_transformed");
            return {v, std::abs(v - vref)};
        }
        case QuadratureSpec::Transform::whole_line: {
            if (spec.scheme == QuadratureSpec::Scheme::gauss_hermite_tensor) {
                const auto& [x, w] = hermite_pi_cached(spec.order);
                cplx v = 0.0;
                for (size_t i = 0; i < x.size(); ++i) v += w[i] * f(x[i]);
                const auto& [xh, wh] = hermite_pi_cached(std::max(2, spec.order / 2));
                cplx vref = 0.0;
                for (size_t i = 0; i < xh.size(); ++i) vref += wh[i] * f(xh[i]);
                require_finite(v, "integrate_1d_transformed");
                return {v, std::abs(v - vref)};
            }
            // fixed window for integrands with at least Gaussian-type decay
            const double W = 10.0;
            if (spec.scheme == QuadratureSpec::Scheme::double_exponential) {
                QuadratureSpec s2 = spec;
                s2.domain_transform = QuadratureSpec::Transform::none;
                return integrate_1d(f, -W, W, s2);
            }
            const cplx v = gl_composite(f, -W, W, spec.order, std::max(spec.subdivisions, 20));
            const int half = std::max(2, spec.order / 2);
            const cplx vref = gl_composite(f, -W, W, half, std::max(spec.subdivisions, 20));
            require_finite(v, "integrate_1d_transformed");
            return {v, std::abs(v - vref)};
        }
        case QuadratureSpec::Transform::none:
            throw std::domain_error("integrate_1d_transformed: needs log_radial or whole_line");
    }
    throw std::domain_error("integrate_1d_transformed: unknown transform");
}

namespace {

cplx gauss_nd_at_order(const std::function<cplx(const double*)>& f, int dim, int order) {
    const auto& [x, w] = hermite_pi_cached(order);
    long total = 1;
    for (int d = 0; d < dim; ++d) total *= order;
    const cplx v = deterministic_sum_cplx(
        total,
        [&](long flat) {
            double pt[4];
            double wt = 1.0;
            long rest = flat;
            for (int d = dim - 1; d >= 0; --d) {
                const int i = static_cast<int>(rest % order);
                rest /= order;
                pt[d] = x[i];
                wt *= w[i];
            }
            return wt * f(pt);
        },
        8192);
    return v;
}

}  // namespace

ValueWithError integrate_gauss_nd(const std::function<cplx(const double*)>& f, int dim,
                                  const QuadratureSpec& spec) {
    check_order(spec);
    if (dim < 1 || dim > 4) throw std::domain_error("integrate_gauss_nd: dim must be in [1,4]");
    const cplx v = gauss_nd_at_order(f, dim, spec.order);
    const cplx vref = gauss_nd_at_order(f, dim, std::max(2, spec.order / 2));
    require_finite(v, "integrate_gauss_nd");
    return {v, std::abs(v - vref)};
}

ValueWithError truncated_sum(const std::function<cplx(long)>& term, const SumPolicy& policy) {
    if (policy.height < 1) throw std::domain_error("truncated_sum: height must be >= 1");
    cplx sum = 0.0;
    double last = 0.0, before_last = 0.0;
    for (long n = 1; n <= policy.height; ++n) {
        const cplx t = term(n);
        sum += t;
        before_last = last;
        last = std::abs(t);
    }
    require_finite(sum, "truncated_sum");

    double tail = 0.0;
    if (last > 0.0) {
        const double H = static_cast<double>(policy.height);
        switch (policy.tail_bound_kind) {
            case SumPolicy::TailKind::geometric: {
                double r = before_last > 0.0 ? std::min(last / before_last, 0.999) : 0.0;
                tail = last * r / (1.0 - r);
                break;
            }
            case SumPolicy::TailKind::power_law: {
                // fit |term| ~ n^-p from the last two terms, integral comparison
                if (before_last > last && policy.height >= 2) {
                    const double p =
                        std::log(before_last / last) / std::log(H / (H - 1.0));
                    tail = p > 1.0 ? last * H / (p - 1.0)
                                   : std::numeric_limits<double>::infinity();
                } else {
                    tail = std::numeric_limits<double>::infinity();
                }
                break;
            }
            case SumPolicy::TailKind::gaussian: {
                // super-geometric decay: ratio keeps shrinking, so the
                // geometric bound with the current ratio is already safe
                double r = before_last > 0.0 ? std::min(last / before_last, 0.5) : 0.0;
                tail = last * r / (1.0 - r);
                break;
            }
        }
    }
    if (tail > policy.abs_tol)
        throw precision_error("truncated_sum: tail estimate exceeds requested tolerance");
    return {sum, tail};
}

}  // namespace heckeq
