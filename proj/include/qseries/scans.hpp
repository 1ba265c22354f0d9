#pragma once

// Large-range modular scans (congruences, parity supports, convolution
// congruences, the Beck statistic) and the rational-point harness for the
// finite identities. Every scan produces an IdentityReport so the CLI and
// the test suite consume one uniform result type.

#include "qseries/finite.hpp"
#include "qseries/report.hpp"

#include <cstddef>
#include <vector>

namespace qseries {

struct Conjecture1Result {
    std::vector<long long> violations;  // n = 29k+21, 29 ∤ k, with b(n) % 4 != 0
    std::vector<long long> exceptional; // m with b(29*29m+21) % 4 == 0
    long long max_n = 0;                // largest index scanned
};

// b(29k+21) == 0 (mod 4) for k >= 1 not a multiple of 29, scanned over all
// coefficients b(0..nmax).
Conjecture1Result scan_conjecture1(std::size_t nmax);
IdentityReport conjecture1_report(std::size_t nmax);

// Parity support of b_ell (ell in {0,1,2}): the odd coefficients sit exactly
// on the documented generalized-pentagonal sets.
IdentityReport parity_report(long long ell, std::size_t nmax);

// sum_{n<=k} b(n) c_X(k-n) + b_1(n) c_chi(k-n) == 0 (mod 2) for 1 <= k <= kmax.
// from_zero selects the n >= 0 convention for X and chi.
IdentityReport convolution_report(std::size_t kmax, bool from_zero);

// Same congruence through the Hauptmodul: sum_{n<=k} b(n) c_5(40(k-n)-1)
// + b_1(n) c_5(40(k-n)-9) == 0 (mod 2), with c_5(-1) = 1 and c_5(-9) = 0.
IdentityReport j5_report(std::size_t kmax);

// e(n) equals the total number of distinct parts over partitions of 2n+2
// with rank n+1, checked against the closed-form generating function.
IdentityReport beck_report(std::size_t nmax);

// The mod-2 triple-sum congruence for b_ell, routed through the catalog.
IdentityReport lcong_report(long long ell, std::size_t order);

// Evaluate one finite identity at `points` exact rational points drawn from
// the shuffled sample pool (resampling past removable poles).
IdentityReport check_finite_identity(FiniteIdentityId id, long long n, long long ell,
                                     unsigned seed, std::size_t points = 5,
                                     std::size_t skip = 0);

} // namespace qseries
