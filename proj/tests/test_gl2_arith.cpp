#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <numeric>
#include <set>

#include "heckeq/gl2_arith.hpp"
#include "heckeq/specfun.hpp"

using namespace heckeq;
using doctest::Approx;

TEST_CASE("divisor sums") {
    CHECK(sigma(1) == 1);
    CHECK(sigma(6) == 12);
    CHECK(sigma(100) == 217);
    CHECK(sigma(9973) == 9974);  // prime
    CHECK_THROWS_AS(sigma(0), std::domain_error);
    CHECK_THROWS_AS(sigma(-4), std::domain_error);
}

TEST_CASE("coset representatives for n = 4") {
    const auto reps = hecke_cosets(4);
    REQUIRE(reps.size() == 7);
    const std::vector<CosetRep> expect = {{1, 0, 4}, {1, 1, 4}, {1, 2, 4}, {1, 3, 4},
                                          {2, 0, 2}, {2, 1, 2}, {4, 0, 1}};
    CHECK(reps == expect);
}

TEST_CASE("coset representative fields and counts") {
    for (long n = 1; n <= 60; ++n) {
        const auto reps = hecke_cosets(n);
        CHECK(static_cast<long>(reps.size()) == sigma(n));
        std::set<std::pair<long, long>> seen;
        for (const auto& r : reps) {
            CHECK(r.a >= 1);
            CHECK(r.d >= 1);
            CHECK(r.a * r.d == n);
            CHECK(r.b >= 0);
            CHECK(r.b < r.d);
            CHECK(seen.insert({r.a, r.b}).second);
        }
    }
    CHECK_THROWS_AS(hecke_cosets(0), std::domain_error);
}

TEST_CASE("coprime pair enumeration") {
    CHECK(enumerate_coprime_pairs(1).size() == 4);
    CHECK(enumerate_coprime_pairs(2).size() == 8);

    const auto pairs = enumerate_coprime_pairs(40);
    std::set<std::pair<long, long>> seen;
    for (const auto& p : pairs) {
        // canonical class representative: n > 0, or the single (1, 0) class
        CHECK((p.n > 0 || (p.n == 0 && p.m == 1)));
        CHECK(std::gcd(std::abs(p.m), std::abs(p.n)) == 1);
        CHECK(std::max(std::abs(p.m), std::abs(p.n)) <= 40);
        CHECK(seen.insert({p.m, p.n}).second);
    }
    // brute-force count over the box, one representative per +- class
    long count = 0;
    for (long n = 1; n <= 40; ++n)
        for (long m = -40; m <= 40; ++m)
            if (std::gcd(std::abs(m), n) == 1) ++count;
    ++count;  // the (1, 0) class
    CHECK(static_cast<long>(pairs.size()) == count);
}

TEST_CASE("growing the box only appends pairs") {
    const auto small = enumerate_coprime_pairs(10);
    const auto big = enumerate_coprime_pairs(15);
    REQUIRE(big.size() > small.size());
    for (size_t i = 0; i < small.size(); ++i) CHECK(big[i] == small[i]);
}

TEST_CASE("completion of a coprime row to a determinant-one matrix") {
    const Mat2i r = bz_coset_rep({2, 3});
    CHECK(r.k == 1);
    CHECK(r.l == 1);
    CHECK(r.m == 2);
    CHECK(r.n == 3);
    CHECK(r.det() == 1);

    for (const auto& p : enumerate_coprime_pairs(20)) {
        const Mat2i g = bz_coset_rep(p);
        CHECK(g.det() == 1);
        CHECK(g.m == p.m);
        CHECK(g.n == p.n);
        if (std::abs(p.m) >= 1) {
            CHECK(g.k >= 0);
            CHECK(g.k < std::abs(p.m));
        }
    }
}

TEST_CASE("coset determinant sum factorizes into two zetas") {
    const cplx s(2.5, 0.0);
    const auto r = gl2_zeta(s, 10000);
    const cplx want = riemann_zeta(cplx(3.0, 0.0)) * riemann_zeta(cplx(2.0, 0.0));
    CHECK(std::abs(r.value - want) / std::abs(want) < 1e-3);
    CHECK(std::abs(r.value - want) <= r.error);

    // deeper cutoff gets closer
    const auto r2 = gl2_zeta(s, 400);
    CHECK(std::abs(r.value - want) < std::abs(r2.value - want));
    CHECK(std::abs(r2.value - want) <= r2.error);

    // divergent region: no finite tail bound exists
    CHECK(gl2_zeta(cplx(1.2, 0.0), 100).error ==
          std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(gl2_zeta(s, 0), std::domain_error);
}
