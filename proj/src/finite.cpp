#include "qseries/finite.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace qseries {

const char* finite_identity_name(FiniteIdentityId id) {
    switch (id) {
    case FiniteIdentityId::Finite1: return "finite1";
    case FiniteIdentityId::TheoremFinite1: return "theoremfinite1";
    case FiniteIdentityId::TheoremGFinite1: return "theoremgfinite1";
    case FiniteIdentityId::LFiniteLemma: return "lfinitelemma";
    case FiniteIdentityId::Finite4: return "finite4";
    case FiniteIdentityId::Finite41: return "finite41";
    }
    return "?";
}

FiniteIdentityId finite_identity_from_name(const std::string& name) {
    for (FiniteIdentityId id :
         {FiniteIdentityId::Finite1, FiniteIdentityId::TheoremFinite1,
          FiniteIdentityId::TheoremGFinite1, FiniteIdentityId::LFiniteLemma,
          FiniteIdentityId::Finite4, FiniteIdentityId::Finite41})
        if (name == finite_identity_name(id)) return id;
    throw std::invalid_argument("unknown finite identity: " + name);
}

BigRational qpow(const BigRational& q0, long long e) {
    if (e < 0 && q0 == 0) throw PoleError("q^negative at q = 0");
    BigRational base = e >= 0 ? q0 : BigRational(1) / q0;
    BigRational acc(1);
    for (long long k = 0; k < (e >= 0 ? e : -e); ++k) acc *= base;
    return acc;
}

BigRational poch_at(const BigRational& a, const BigRational& q0, long long n) {
    BigRational acc(1);
    if (n >= 0) {
        for (long long k = 0; k < n; ++k) acc *= BigRational(1) - a * qpow(q0, k);
        return acc;
    }
    for (long long k = 1; k <= -n; ++k) {
        const BigRational f = BigRational(1) - a * qpow(q0, -k);
        if (f == 0) throw PoleError("vanishing factor in negative-index Pochhammer");
        acc /= f;
    }
    return acc;
}

BigRational qbinom_at(long long n, long long m, const BigRational& q0) {
    if (m < 0 || n < 0 || m > n) return BigRational(0);
    const BigRational den = poch_at(q0, q0, m) * poch_at(q0, q0, n - m);
    if (den == 0) throw PoleError("vanishing (q)_k in Gaussian binomial");
    return poch_at(q0, q0, n) / den;
}

namespace {

BigRational sgn(long long e) { return (((e % 2) + 2) % 2 == 0) ? BigRational(1) : BigRational(-1); }

BigRational safe_div(const BigRational& num, const BigRational& den) {
    if (den == 0) throw PoleError("vanishing denominator");
    return num / den;
}

// sum_{j=0}^{n} (-1)_j (-1)^j q0^{-jM} / (q0)_j; 0 when n < 0.
BigRational fine_sum(long long n, long long M, const BigRational& q0) {
    BigRational acc(0);
    for (long long j = 0; j <= n; ++j)
        acc += sgn(j) * safe_div(poch_at(BigRational(-1), q0, j) * qpow(q0, -j * M),
                                 poch_at(q0, q0, j));
    return acc;
}

// sum_{j=lo}^{hi} (-q)_{j-1} (-1)_j (1+q^{2j}) q^{-j^2} / (q)_j^2
BigRational squared_sum(long long lo, long long hi, const BigRational& q0) {
    BigRational acc(0);
    for (long long j = lo; j <= hi; ++j) {
        const BigRational den = poch_at(q0, q0, j);
        acc += safe_div(poch_at(-q0, q0, j - 1) * poch_at(BigRational(-1), q0, j) *
                            (BigRational(1) + qpow(q0, 2 * j)) * qpow(q0, -j * j),
                        den * den);
    }
    return acc;
}

} // namespace

std::pair<BigRational, BigRational> finite_identity_sides(FiniteIdentityId id, long long n,
                                                          long long ell, const BigRational& q0,
                                                          const BigRational& lambda,
                                                          const BigRational& a,
                                                          const BigRational& b) {
    if (q0 == 0) throw PoleError("q = 0");
    switch (id) {
    case FiniteIdentityId::Finite1: {
        if (n < 1) throw std::invalid_argument("finite1: n >= 1");
        const BigRational lhs = BigRational(1) + squared_sum(1, n - 1, q0);
        const BigRational rhs = sgn(n - 1) *
                                safe_div(poch_at(-q0, q0, n - 1), poch_at(q0, q0, n - 1)) *
                                fine_sum(n - 1, n - 1, q0);
        return {lhs, rhs};
    }
    case FiniteIdentityId::TheoremFinite1: {
        if (n < 1) throw std::invalid_argument("theoremfinite1: n >= 1");
        const BigRational lhs = fine_sum(n, n - 1, q0);
        const BigRational rhs = -safe_div(BigRational(1) + qpow(q0, n),
                                          BigRational(1) - qpow(q0, n)) *
                                fine_sum(n - 1, n, q0);
        return {lhs, rhs};
    }
    case FiniteIdentityId::TheoremGFinite1: {
        // valid for all integer n, ell; for ell < -n (n >= 0) both sides are
        // multiplied through by (-q^{n+1})_ell / (q^{n+1})_ell, under which
        // the identity reads lhs * prod = (-1)^ell * sum and both sides are 0
        // because the product contains the factor (1 - q^0).
        if (n >= 0 && ell < -n) {
            BigRational prod(1);
            for (long long k = 1; k <= -ell; ++k)
                prod *= safe_div(BigRational(1) - qpow(q0, n + 1 - k),
                                 BigRational(1) + qpow(q0, n + 1 - k));
            return {fine_sum(n, n + ell, q0) * prod, sgn(ell) * fine_sum(n + ell, n, q0)};
        }
        const BigRational lhs = fine_sum(n, n + ell, q0);
        const BigRational ratio = safe_div(poch_at(qpow(q0, n + 1), q0, ell),
                                           poch_at(-qpow(q0, n + 1), q0, ell));
        return {lhs, sgn(ell) * ratio * fine_sum(n + ell, n, q0)};
    }
    case FiniteIdentityId::LFiniteLemma: {
        if (n < 0 || ell < 0) throw std::invalid_argument("lfinitelemma: n, ell >= 0");
        const BigRational lhs = squared_sum(n + 1, n + ell, q0);
        BigRational first(0), second(0);
        for (long long j = n + 1; j <= n + ell; ++j) {
            const BigRational base =
                sgn(j) * safe_div(poch_at(BigRational(-1), q0, j), poch_at(q0, q0, j));
            first += base * qpow(q0, -j * (n + ell));
            second += base * qpow(q0, -j * n);
        }
        const BigRational rhs =
            sgn(n + ell) * safe_div(poch_at(-q0, q0, n + ell), poch_at(q0, q0, n + ell)) *
                first +
            sgn(n) * safe_div(poch_at(-q0, q0, n), poch_at(q0, q0, n)) * second;
        return {lhs, rhs};
    }
    case FiniteIdentityId::Finite4: {
        if (n < 0) throw std::invalid_argument("finite4: n >= 0");
        if (a == 0 || b == 0) throw std::invalid_argument("finite4: a, b nonzero");
        BigRational lhs(0), rsum(0);
        BigRational am(1), bm(1);
        for (long long m = 0; m <= n; ++m) {
            if (m >= 1) {
                am *= a;
                bm *= b;
            }
            const BigRational g = qbinom_at(n, m, q0);
            const BigRational tri = qpow(q0, m * (m + 1) / 2);
            lhs += safe_div(g * poch_at(-lambda / a, q0, m) * am * tri,
                            poch_at(-b * q0, q0, m));
            rsum += safe_div(g * poch_at(-lambda / b, q0, m) * bm * tri,
                             poch_at(-a * q0, q0, m));
        }
        const BigRational rhs =
            safe_div(poch_at(-a * q0, q0, n), poch_at(-b * q0, q0, n)) * rsum;
        return {lhs, rhs};
    }
    case FiniteIdentityId::Finite41: {
        if (n < 0) throw std::invalid_argument("finite41: n >= 0");
        if (b == 0) throw std::invalid_argument("finite41: b nonzero");
        BigRational lhs(0), rsum(0);
        BigRational lm(1), bm(1);
        for (long long m = 0; m <= n; ++m) {
            if (m >= 1) {
                lm *= lambda;
                bm *= b;
            }
            const BigRational g = qbinom_at(n, m, q0);
            lhs += safe_div(g * lm * qpow(q0, m * m), poch_at(-b * q0, q0, m));
            rsum += g * poch_at(-lambda / b, q0, m) * bm * qpow(q0, m * (m + 1) / 2);
        }
        return {lhs, safe_div(rsum, poch_at(-b * q0, q0, n))};
    }
    }
    throw std::invalid_argument("unknown finite identity id");
}

std::vector<BigRational> sample_points(unsigned seed, std::size_t count, std::size_t skip) {
    std::vector<BigRational> pool;
    for (long long p = 1; p <= 13; ++p)
        for (long long r = 1; r <= 13; ++r) {
            if (std::gcd(p, r) != 1 || p == r) continue;
            pool.emplace_back(BigInt(p), BigInt(r));
            pool.emplace_back(BigInt(-p), BigInt(r));
        }
    std::mt19937 rng(seed);
    std::shuffle(pool.begin(), pool.end(), rng);
    if (skip + count > pool.size())
        throw std::invalid_argument("sample_points: pool exhausted");
    return {pool.begin() + static_cast<long long>(skip),
            pool.begin() + static_cast<long long>(skip + count)};
}

} // namespace qseries
