#pragma once

// Finite q-identities checked by exact rational-point evaluation. Each
// evaluator returns both sides at a sample point q0; a PoleError signals
// that a denominator factor vanished at q0 and the caller should resample.

#include "qseries/rings.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qseries {

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FiniteIdentityId {
    Finite1,
    TheoremFinite1,
    TheoremGFinite1,
    LFiniteLemma,
    Finite4,
    Finite41,
};

const char* finite_identity_name(FiniteIdentityId id);
FiniteIdentityId finite_identity_from_name(const std::string& name);

// q0^e for e of either sign; q0 must be nonzero for e < 0.
BigRational qpow(const BigRational& q0, long long e);

// (a; q0)_n with the negative-index convention
// (a)_{-n} = prod_{k=1}^{n} (1 - a q0^{-k})^{-1}; throws PoleError when an
// inverted factor vanishes.
BigRational poch_at(const BigRational& a, const BigRational& q0, long long n);

// [n choose m]_{q0}; 0 outside 0 <= m <= n.
BigRational qbinom_at(long long n, long long m, const BigRational& q0);

// Both sides of the chosen identity at q0. Parameters lambda, a, b are used
// only by Finite4/Finite41 (a also by nothing else); ell only where present.
std::pair<BigRational, BigRational> finite_identity_sides(
    FiniteIdentityId id, long long n, long long ell, const BigRational& q0,
    const BigRational& lambda = BigRational(2, 3), const BigRational& a = BigRational(1, 2),
    const BigRational& b = BigRational(3));

// The sample-point pool {±p/r : p, r <= 13, gcd(p,r)=1, p/r not in {0,±1}},
// deterministically shuffled by seed.
std::vector<BigRational> sample_points(unsigned seed, std::size_t count,
                                       std::size_t skip = 0);

} // namespace qseries
