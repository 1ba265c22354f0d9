#pragma once

// q-series primitives: Pochhammer products, Gaussian binomials, box
// partition counts, bilateral Jacobi-type theta sums, and the pentagonal
// fast path for (q;q)_inf.

#include "qseries/laurent.hpp"
#include "qseries/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qseries {

inline constexpr long long kInfiniteCount = -1;

// Truncated prod_{k=0}^{count-1} (1 - a q^{e0 + k*step}); count = kInfiniteCount
// runs until the exponent reaches the order.
template <class R>
Series<R> pochhammer(const R& ring, const typename R::Value& a, long long e0, long long step,
                     long long count, std::size_t order) {
    if (e0 < 1 && count == kInfiniteCount)
        throw std::invalid_argument("infinite Pochhammer needs base exponent >= 1");
    if (step < 1) throw std::invalid_argument("pochhammer: step must be >= 1");
    Series<R> r = Series<R>::one(ring, order);
    const typename R::Value ma = ring.neg(a);
    for (long long k = 0; count == kInfiniteCount || k < count; ++k) {
        const long long e = e0 + k * step;
        if (e >= static_cast<long long>(order)) {
            if (count == kInfiniteCount) break;
            continue; // finite factor beyond truncation: no effect
        }
        if (e == 0) {
            // (1 - a) scalar factor
            r = r.scaled(ring.sub(ring.one(), a));
        } else {
            r.mul_binomial_inplace(e, ma);
        }
    }
    return r;
}

// (q^{e0}; q^{step})_inf with coefficient +1, the common case.
template <class R>
Series<R> pochhammer_q(const R& ring, long long e0, long long step, long long count,
                       std::size_t order) {
    return pochhammer(ring, ring.one(), e0, step, count, order);
}

// Truncated sum_{n in Z} (-1)^n q^{n(An+B)/2}, nonnegative exponents only.
// Throws if some contributing term has an odd n(An+B).
template <class R>
Series<R> jacobi_sum(const R& ring, long long A, long long B, std::size_t order) {
    if (A <= 0) throw std::invalid_argument("jacobi_sum: A must be positive");
    Series<R> r(ring, order);
    auto emit = [&](long long n) {
        const long long num = n * (A * n + B);
        if (num % 2 != 0)
            throw std::domain_error("jacobi_sum: half-integer exponent; substitute q -> x^2");
        const long long e = num / 2;
        if (e >= 0 && e < static_cast<long long>(order))
            r.add_term(e, (((n % 2) + 2) % 2 == 0) ? ring.one() : ring.neg(ring.one()));
    };
    // |n| bound: past it, n(An+B)/2 >= order on both wings (A > 0).
    long long bound = 2;
    while (bound * (A * bound - std::llabs(B)) / 2 < static_cast<long long>(order)) ++bound;
    for (long long n = -bound; n <= bound; ++n) emit(n);
    return r;
}

// Sparse pentagonal expansion of (q^t; q^t)_inf: the fast path for the
// big modular scans.
template <class R>
SparseTerms<R> euler_product_sparse(const R& ring, long long t, std::size_t order) {
    std::vector<std::pair<long long, typename R::Value>> terms;
    terms.emplace_back(0, ring.one());
    for (long long n = 1;; ++n) {
        const long long e1 = t * n * (3 * n - 1) / 2;
        const long long e2 = t * n * (3 * n + 1) / 2;
        if (e1 >= static_cast<long long>(order)) break;
        const typename R::Value s = (n % 2 != 0) ? ring.neg(ring.one()) : ring.one();
        terms.emplace_back(e1, s);
        if (e2 < static_cast<long long>(order)) terms.emplace_back(e2, s);
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return terms;
}

// Gaussian binomial [Ntop choose n] as a dense integer coefficient vector
// (degree n(Ntop-n)); the zero polynomial outside 0 <= n <= Ntop.
std::vector<BigInt> gaussian_binomial(long long Ntop, long long n);

// Coefficient of q^k in [Nbox+M choose M]: partitions of k into at most M
// parts, each <= Nbox. Zero whenever Nbox < 0 or M < 0 or k < 0.
BigInt partitions_in_box(long long Nbox, long long M, long long k);

template <class R>
Series<R> gaussian_binomial_series(const R& ring, long long Ntop, long long n,
                                   std::size_t order) {
    Series<R> r(ring, order);
    const auto g = gaussian_binomial(Ntop, n);
    for (std::size_t i = 0; i < g.size() && i < order; ++i) r.set(i, ring.from_integer(g[i]));
    return r;
}

template <class R>
LaurentPoly<R> gaussian_binomial_poly(const R& ring, long long Ntop, long long n) {
    LaurentPoly<R> p(ring);
    const auto g = gaussian_binomial(Ntop, n);
    for (std::size_t i = 0; i < g.size(); ++i)
        p.add_term(static_cast<long long>(i), ring.from_integer(g[i]));
    return p;
}

} // namespace qseries
