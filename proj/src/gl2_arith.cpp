#include "heckeq/gl2_arith.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace heckeq {

long sigma(long n) {
    if (n < 1) throw std::domain_error("sigma: n must be positive");
    long s = 0;
    for (long a = 1; a * a <= n; ++a) {
        if (n % a) continue;
        s += a;
        if (a != n / a) s += n / a;
    }
    return s;
}

std::vector<CosetRep> hecke_cosets(long n) {
    if (n < 1) throw std::domain_error("hecke_cosets: n must be positive");
    std::vector<CosetRep> out;
    for (long a = 1; a <= n; ++a) {
        if (n % a) continue;
        const long d = n / a;
        for (long b = 0; b < d; ++b) out.push_back({a, b, d});
    }
    return out;
}

std::vector<CoprimePair> enumerate_coprime_pairs(long H) {
    if (H < 1) throw std::domain_error("enumerate_coprime_pairs: H must be positive");
    // walk square rings outward so truncation at H keeps all pairs with
    // max(|m|, n) <= H
    std::vector<CoprimePair> out;
    for (long h = 1; h <= H; ++h) {
        for (long m = -h; m <= h; ++m)
            if (std::gcd(std::abs(m), h) == 1) out.push_back({m, h});
        for (long n = 1; n < h; ++n)
            if (std::gcd(h, n) == 1) out.push_back({h, n});
        for (long n = 1; n < h; ++n)
            if (std::gcd(h, n) == 1) out.push_back({-h, n});
        if (h == 1) out.push_back({1, 0});
    }
    return out;
}

Mat2i bz_coset_rep(const CoprimePair& p) {
    const long m = p.m, n = p.n;
    if (m == 0 && n == 0) throw std::domain_error("bz_coset_rep: pair must be nonzero");
    if (std::gcd(std::abs(m), std::abs(n)) != 1)
        throw std::domain_error("bz_coset_rep: pair must be coprime");
    if (m == 0) {
        const long k = n > 0 ? 1 : -1;  // k n = 1 forces k = sign(n)
        return {k, 0, 0, n};
    }
    if (n == 0) {
        const long l = m > 0 ? -1 : 1;  // -l m = 1 forces l = -sign(m)
        return {0, l, m, 0};
    }
    const long am = std::abs(m);
    const long r = ((n % am) + am) % am;
    long k = 0;
    for (long c = 0; c < am; ++c) {
        if ((c * r) % am == 1 % am) {
            k = c;
            break;
        }
    }
    // kn = 1 mod |m|, so the division is exact and det(k l; m n) = 1
    const long l = (k * n - 1) / m;
    return {k, l, m, n};
}

ValueWithError gl2_zeta(cplx s, long det_cutoff) {
    if (det_cutoff < 1) throw std::domain_error("gl2_zeta: cutoff must be >= 1");
    // each coset (a, b, d) with ad = n contributes n^{-(s+1/2)} independent of
    // b, so the divisor pair (a, d) carries multiplicity d
    cplx sum = 0.0;
    const cplx e = s + 0.5;
    for (long n = 1; n <= det_cutoff; ++n) {
        long sn = 0;
        for (long a = 1; a * a <= n; ++a) {
            if (n % a) continue;
            sn += a;
            if (a != n / a) sn += n / a;
        }
        sum += static_cast<double>(sn) * std::pow(static_cast<double>(n), -e);
    }
    // tail bound from sigma(n) < n (1 + ln n) and the integral comparison of
    // (1 + ln t) t^{1-x} over [C, inf), valid for x = Re s + 1/2 > 2
    const double x = s.real() + 0.5;
    double tail = std::numeric_limits<double>::infinity();
    if (x > 2.0) {
        const double C = static_cast<double>(det_cutoff);
        const double q = x - 2.0;
        tail = std::pow(C, -q) * ((1.0 + std::log(C)) / q + 1.0 / (q * q));
    }
    return {sum, tail};
}

}  // namespace heckeq
