#pragma once

#include <vector>

#include "heckeq/types.hpp"

namespace heckeq {

// Upper-triangular representative (a b; 0 d) with a d = n, 0 <= b < d.
struct CosetRep {
    long a, b, d;
    long det() const { return a * d; }
    bool operator==(const CosetRep&) const = default;
};

// One representative of a +-class of a coprime pair; canonical sign has
// n > 0, with (1, 0) standing for the n = 0 class.
struct CoprimePair {
    long m, n;
    bool operator==(const CoprimePair&) const = default;
};

// Integer 2x2 matrix (k l; m n).
struct Mat2i {
    long k, l, m, n;
    long det() const { return k * n - l * m; }
};

// Sum of positive divisors of n.
long sigma(long n);

// All (a, b, d) with a d = n, 0 <= b < d, ordered by (a, b); exactly sigma(n)
// of them.
std::vector<CosetRep> hecke_cosets(long n);

// Canonical coprime +-class representatives with max(|m|, |n|) <= H,
// enumerated ring by ring so that growing H only appends.
std::vector<CoprimePair> enumerate_coprime_pairs(long H);

// Completion of a coprime bottom row (m n) to (k l; m n) with k n - l m = +1
// and 0 <= k < |m| for |m| >= 1.
Mat2i bz_coset_rep(const CoprimePair& p);

// Truncated coset-determinant sum  sum_{det <= cutoff} det^{-(s+1/2)},
// grouped over (a, d) divisor pairs with multiplicity d for the b-index.
// Converges to zeta(s+1/2) zeta(s-1/2) for Re s > 3/2.
ValueWithError gl2_zeta(cplx s, long det_cutoff);

}  // namespace heckeq
