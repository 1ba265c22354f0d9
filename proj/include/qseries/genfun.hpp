#pragma once

// Closed-form evaluators for every generating function in the catalog:
// the rank parity function sigma_2,l, Rascoe / non-Rascoe double sums, the
// conjugation and Hecke-type representations, the Garrett-Ismail-Stanton
// right-hand side, tenth-order mock theta coefficients, the j_5 Hauptmodul,
// the unrestricted analogues, and the page-27 / 6.2 / 6.3 identities.

#include "qseries/bivariate.hpp"
#include "qseries/qfunctions.hpp"
#include "qseries/series.hpp"

#include <utility>
#include <vector>

namespace qseries {

inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// ---------------------------------------------------------------------------
// building blocks

// (q^t; q^t)_inf, dense, via the pentagonal number theorem.
template <class R>
Series<R> euler_product(const R& ring, long long t, std::size_t order) {
    Series<R> s = Series<R>::one(ring, order);
    s.mul_sparse_inplace(euler_product_sparse(ring, t, order));
    return s;
}

// Multiply in place by (-q)_inf = (q^2;q^2)_inf / (q;q)_inf, O(N sqrt N).
template <class R>
void mul_neg_q_inf_inplace(Series<R>& s) {
    const R& ring = s.ring();
    s.mul_sparse_inplace(euler_product_sparse(ring, 2, s.order()));
    s.div_sparse_inplace(euler_product_sparse(ring, 1, s.order()));
}

template <class R>
void div_neg_q_inf_inplace(Series<R>& s) {
    const R& ring = s.ring();
    s.mul_sparse_inplace(euler_product_sparse(ring, 1, s.order()));
    s.div_sparse_inplace(euler_product_sparse(ring, 2, s.order()));
}

template <class R>
Series<R> neg_q_inf(const R& ring, std::size_t order) {
    Series<R> s = Series<R>::one(ring, order);
    mul_neg_q_inf_inplace(s);
    return s;
}

// [Ntop choose n]_q truncated to `order`, via binomial factor updates.
template <class R>
Series<R> qbinom_truncated(const R& ring, long long Ntop, long long n, std::size_t order) {
    if (n < 0 || Ntop < 0 || n > Ntop) return Series<R>(ring, order); // zero
    Series<R> s = Series<R>::one(ring, order);
    const auto minus_one = ring.neg(ring.one());
    for (long long k = n + 1; k <= Ntop; ++k)
        if (k < static_cast<long long>(order)) s.mul_binomial_inplace(k, minus_one);
    for (long long k = 1; k <= Ntop - n; ++k)
        if (k < static_cast<long long>(order)) s.div_binomial_inplace(k, minus_one);
    return s;
}

// Incrementally maintained inverses 1/(q)_m, m = 0..mmax.
template <class R>
std::vector<Series<R>> poch_inverses(const R& ring, long long mmax, std::size_t order) {
    std::vector<Series<R>> inv;
    inv.reserve(static_cast<std::size_t>(mmax) + 1);
    inv.push_back(Series<R>::one(ring, order));
    const auto minus_one = ring.neg(ring.one());
    for (long long m = 1; m <= mmax; ++m) {
        Series<R> s = inv.back();
        if (m < static_cast<long long>(order)) s.div_binomial_inplace(m, minus_one);
        inv.push_back(std::move(s));
    }
    return inv;
}

template <class R>
typename R::Value scalar_pow(const R& ring, const typename R::Value& x, long long e) {
    typename R::Value base = e >= 0 ? x : ring.inv(x);
    typename R::Value acc = ring.one();
    for (long long k = 0; k < (e >= 0 ? e : -e); ++k) acc = ring.mul(acc, base);
    return acc;
}

// ---------------------------------------------------------------------------
// sigma_2,l and the non-Rascoe generating functions

// sum_{n>=0} (-1)^n q^{n^2+l n} / (-q)_n
template <class R>
Series<R> sigma2_ell(const R& ring, std::size_t order, long long ell) {
    Series<R> r(ring, order);
    Series<R> inv = Series<R>::one(ring, order); // 1/(-q)_n, updated per n
    for (long long n = 0;; ++n) {
        const long long e = n * n + ell * n;
        if (n > 0 && e >= static_cast<long long>(order)) break;
        if (n >= 1 && n < static_cast<long long>(order)) inv.div_binomial_inplace(n, ring.one());
        r.add_scaled_shifted(inv, e, (n % 2 == 0) ? ring.one() : ring.neg(ring.one()));
    }
    return r;
}

// (-q)_inf * sigma_2,l: coefficient of q^n is b_l(n).
template <class R>
Series<R> nonrascoe_gf(const R& ring, std::size_t order, long long ell) {
    Series<R> s = sigma2_ell(ring, order, ell);
    mul_neg_q_inf_inplace(s);
    return s;
}

// sum_{n>=0} (-1)^n q^{n^2} (-q^{n+1})_inf : the second product form of the
// non-Rascoe generating function.
template <class R>
Series<R> nonrascoe_product_form(const R& ring, std::size_t order) {
    Series<R> r(ring, order);
    Series<R> tail = neg_q_inf(ring, order); // (-q^{n+1})_inf, peeled per n
    for (long long n = 0; n * n < static_cast<long long>(order); ++n) {
        if (n > 0) tail.div_binomial_inplace(n, ring.one());
        r.add_scaled_shifted(tail, n * n, (n % 2 == 0) ? ring.one() : ring.neg(ring.one()));
    }
    return r;
}

// Double sum generating a_l(N): constant term 0.
template <class R>
Series<R> rascoe_double_sum(const R& ring, std::size_t order, long long ell) {
    Series<R> r(ring, order);
    long long nmax = 1;
    while (nmax * (nmax + 1) / 2 < static_cast<long long>(order)) ++nmax;
    const auto invq = poch_inverses(ring, nmax, order);
    for (long long n = 1; n * (n + 1) / 2 < static_cast<long long>(order); ++n) {
        const long long tri = n * (n + 1) / 2;
        for (long long m = 0; m <= n - 1; ++m) {
            const long long e = tri + (m + ell) * (m + 1);
            if (e >= static_cast<long long>(order)) break;
            Series<R> term = qbinom_truncated(ring, n + ell - 1, m + ell,
                                              order - static_cast<std::size_t>(e));
            if (term.is_zero()) continue;
            term = term * invq[static_cast<std::size_t>(m)].truncated(term.order());
            r.add_scaled_shifted(term, e, ring.one());
        }
    }
    return r;
}

// Double sum generating b_l(N), including the constant term b_l(0) = 1
// (the empty partition; at l = 0 this is the (n,m) = (0,0) term).
template <class R>
Series<R> nonrascoe_double_sum(const R& ring, std::size_t order, long long ell) {
    Series<R> r(ring, order);
    if (order > 0) r.add_term(0, ring.one());
    long long nmax = 1;
    while (nmax * (nmax + 1) / 2 < static_cast<long long>(order)) ++nmax;
    const auto invq = poch_inverses(ring, nmax, order);
    for (long long n = 1; n * (n + 1) / 2 < static_cast<long long>(order); ++n) {
        const long long tri = n * (n + 1) / 2;
        for (long long m = 0; m <= n; ++m) {
            const long long e = tri + m * m + ell * m;
            if (e >= static_cast<long long>(order)) break;
            Series<R> term = qbinom_truncated(ring, n + ell - 1, m + ell - 1,
                                              order - static_cast<std::size_t>(e));
            if (term.is_zero()) continue;
            term = term * invq[static_cast<std::size_t>(m)].truncated(term.order());
            r.add_scaled_shifted(term, e, ring.one());
        }
    }
    return r;
}

// The b_l double sum divided by (-q)_inf, equal to sigma_2,l.
template <class R>
Series<R> sigma2_from_double_sum(const R& ring, std::size_t order, long long ell) {
    Series<R> s = nonrascoe_double_sum(ring, order, ell);
    div_neg_q_inf_inplace(s);
    return s;
}

// sum_n q^{n^2+l n}/(q)_n: the generalized Rogers-Ramanujan sum side.
template <class R>
Series<R> rr_sum(const R& ring, std::size_t order, long long ell) {
    Series<R> r(ring, order);
    Series<R> inv = Series<R>::one(ring, order);
    const auto minus_one = ring.neg(ring.one());
    for (long long n = 0;; ++n) {
        const long long e = n * n + ell * n;
        if (n > 0 && e >= static_cast<long long>(order)) break;
        if (n >= 1 && n < static_cast<long long>(order)) inv.div_binomial_inplace(n, minus_one);
        r.add_scaled_shifted(inv, e, ring.one());
    }
    return r;
}

// ---------------------------------------------------------------------------
// rank generating function (bivariate, z tracks the rank)

// sum_n z^{n+l-1} q^{n^2+l n} / (zq)_n
template <class R>
BivariateSeries<R> rr_rank_bivariate(const R& ring, std::size_t order, long long ell) {
    BivariateSeries<R> r(ring, order);
    BivariateSeries<R> inv(ring, order); // 1/(zq)_n
    inv.add_term(0, 0, ring.one());
    for (long long n = 0;; ++n) {
        const long long e = n * n + ell * n;
        if (n > 0 && e >= static_cast<long long>(order)) break;
        if (n >= 1 && n < static_cast<long long>(order)) inv.div_z_binomial_inplace(n);
        BivariateSeries<R> term = inv;
        term.shift_inplace(e, n + ell - 1);
        r.add_inplace(term);
    }
    return r;
}

// ---------------------------------------------------------------------------
// conjugation representations (the base form and its l-shift)

// LHS of both conjugation identities: sum_n z^n q^{n^2+l n} / (-q)_n.
template <class R>
Series<R> conj_lhs(const R& ring, std::size_t order, long long ell,
                   const typename R::Value& z) {
    Series<R> r(ring, order);
    Series<R> inv = Series<R>::one(ring, order);
    typename R::Value zn = ring.one();
    for (long long n = 0;; ++n) {
        const long long e = n * n + ell * n;
        if (n > 0 && e >= static_cast<long long>(order)) break;
        if (n >= 1 && n < static_cast<long long>(order)) inv.div_binomial_inplace(n, ring.one());
        r.add_scaled_shifted(inv, e, zn);
        zn = ring.mul(zn, z);
    }
    return r;
}

// RHS of the conjugation identity with shift l (l = 0 is theoremsmall1):
// z^{-l}/(-q)_inf sum_n q^{n(n+1)/2 - l n} sum_{i=l}^n z^i q^{i(i-1)/2}/(q)_{n-i}
template <class R>
Series<R> conj_rhs_small1(const R& ring, std::size_t order, long long ell,
                          const typename R::Value& z) {
    Series<R> acc(ring, order);
    long long nmax = ell;
    while ((nmax - ell) * (nmax - ell + 1) / 2 < static_cast<long long>(order)) ++nmax;
    const auto invq = poch_inverses(ring, nmax, order);
    for (long long n = ell; (n - ell) * (n - ell + 1) / 2 < static_cast<long long>(order); ++n) {
        for (long long i = ell; i <= n; ++i) {
            const long long e = n * (n + 1) / 2 - ell * n + i * (i - 1) / 2;
            if (e >= static_cast<long long>(order)) continue;
            acc.add_scaled_shifted(invq[static_cast<std::size_t>(n - i)], e,
                                   scalar_pow(ring, z, i));
        }
    }
    div_neg_q_inf_inplace(acc);
    return acc.scaled(scalar_pow(ring, z, -ell));
}

// RHS of theoremsmall2 (l = 0 only):
// (-z^{-1}q)_inf/(-q)_inf sum_n (-z)_n q^{n(n+1)/2}
//   - 1/(-q)_inf sum_n q^{n(n+1)/2} sum_{i>=1} z^{-i} q^{i(i+1)/2}/(q)_{n+i}
template <class R>
Series<R> conj_rhs_small2(const R& ring, std::size_t order, const typename R::Value& z) {
    const auto zinv = ring.inv(z);

    Series<R> first(ring, order);
    Series<R> negz = Series<R>::one(ring, order); // (-z)_n as a polynomial in q
    for (long long n = 0; n * (n + 1) / 2 < static_cast<long long>(order); ++n) {
        if (n >= 1) {
            if (n - 1 == 0)
                negz = negz.scaled(ring.add(ring.one(), z)); // factor (1 + z q^0)
            else if (n - 1 < static_cast<long long>(order))
                negz.mul_binomial_inplace(n - 1, z);
        }
        first.add_scaled_shifted(negz, n * (n + 1) / 2, ring.one());
    }
    first = first * pochhammer(ring, ring.neg(zinv), 1, 1, kInfiniteCount, order);

    long long top = 1;
    while (top * (top + 1) / 2 < static_cast<long long>(order)) ++top;
    const auto invq = poch_inverses(ring, 2 * top + 2, order);
    Series<R> second(ring, order);
    for (long long n = 0; n * (n + 1) / 2 < static_cast<long long>(order); ++n) {
        for (long long i = 1;; ++i) {
            const long long e = n * (n + 1) / 2 + i * (i + 1) / 2;
            if (e >= static_cast<long long>(order)) break;
            second.add_scaled_shifted(invq[static_cast<std::size_t>(n + i)], e,
                                      scalar_pow(ring, zinv, i));
        }
    }

    Series<R> r = first - second;
    div_neg_q_inf_inplace(r);
    return r;
}

// ---------------------------------------------------------------------------
// Hecke-type representations

// (-1)_j = (-1;q)_j: 1 for j = 0, else 2(1+q)(1+q^2)...(1+q^{j-1}).
template <class R>
Series<R> poch_minus_one(const R& ring, long long j, std::size_t order) {
    Series<R> s = Series<R>::one(ring, order);
    if (j <= 0) return s;
    s = s.scaled(ring.from_int(2));
    for (long long k = 1; k <= j - 1 && k < static_cast<long long>(order); ++k)
        s.mul_binomial_inplace(k, ring.one());
    return s;
}

enum class HeckeVariant { I, II };

/// Two Hecke-type double-sum representations of sigma_2(q).
template <class R>
Series<R> hecke_rep(const R& ring, std::size_t order, HeckeVariant variant) {
    const long long N = static_cast<long long>(order);
    Series<R> acc = Series<R>::one(ring, order);
    for (long long n = 1; n * (3 * n + 1) / 2 < N; ++n) {
        const long long pre = n * (5 * n - 1) / 2;
        const long long off = -n * (n - 1); // lowest inner exponent
        const std::size_t len = static_cast<std::size_t>(N - off);
        Series<R> inner(ring, len);
        Series<R> invq = Series<R>::one(ring, len);
        Series<R> negpoch = Series<R>::one(ring, len); // (-1)_j
        const long long jtop = (variant == HeckeVariant::I) ? n : n - 1;
        for (long long j = 0; j <= jtop; ++j) {
            if (j >= 1) {
                invq.div_binomial_inplace(j, ring.neg(ring.one()));
                if (j == 1)
                    negpoch = negpoch.scaled(ring.from_int(2));
                else
                    negpoch.mul_binomial_inplace(j - 1, ring.one());
            }
            // exponent: j - jn for variant I, -jn for variant II
            const long long e = (variant == HeckeVariant::I) ? j - j * n : -j * n;
            Series<R> t = negpoch * invq;
            inner.add_scaled_shifted(t, e - off,
                                     (j % 2 == 0) ? ring.one() : ring.neg(ring.one()));
        }
        inner.mul_binomial_inplace(2 * n, ring.one()); // (1 + q^{2n})
        if (variant == HeckeVariant::I)
            inner.div_binomial_inplace(n, ring.one()); // 1/(1 + q^n)
        else
            inner.div_binomial_inplace(n, ring.neg(ring.one())); // 1/(1 - q^n)
        const bool negate = (variant == HeckeVariant::II) ? (n % 2 == 0) : (n % 2 != 0);
        Series<R> contrib =
            OffsetSeries<R>(off + pre, std::move(inner)).to_series(order);
        acc.add_scaled_shifted(contrib, 0, negate ? ring.neg(ring.one()) : ring.one());
    }
    div_neg_q_inf_inplace(acc);
    return acc;
}

enum class GSigmaVariant { LM1, LM2 };

/// Two Hecke-type representations of sigma_2,l.
template <class R>
Series<R> gsigma_rep(const R& ring, std::size_t order, long long ell, GSigmaVariant variant) {
    const long long N = static_cast<long long>(order);
    // leading (-q)_l
    Series<R> acc = pochhammer(ring, ring.neg(ring.one()), 1, 1, ell, order);
    for (long long n = 1; n * (3 * n + 1) / 2 + ell * n < N; ++n) {
        const long long pre = n * (5 * n - 1) / 2 + 2 * ell * n;
        const long long off =
            (variant == GSigmaVariant::LM1) ? -(n + ell - 1) * n : (1 - n - ell) * n;
        const long long lo = std::min(off, 0LL);
        const std::size_t len = static_cast<std::size_t>(N - lo);
        Series<R> inner(ring, len);
        Series<R> invq = Series<R>::one(ring, len);
        Series<R> negpoch = Series<R>::one(ring, len);
        const long long mtop = (variant == GSigmaVariant::LM1) ? n + ell - 1 : n;
        for (long long m = 0; m <= mtop; ++m) {
            if (m >= 1) {
                invq.div_binomial_inplace(m, ring.neg(ring.one()));
                if (m == 1)
                    negpoch = negpoch.scaled(ring.from_int(2));
                else
                    negpoch.mul_binomial_inplace(m - 1, ring.one());
            }
            const long long e =
                (variant == GSigmaVariant::LM1) ? -m * n : m * (1 - n - ell);
            Series<R> t = negpoch * invq;
            inner.add_scaled_shifted(t, e - lo,
                                     (m % 2 == 0) ? ring.one() : ring.neg(ring.one()));
        }
        inner.mul_binomial_inplace(ell + 2 * n, ring.one()); // (1 + q^{l+2n})
        // (q^{n+1})_{l-1} resp. (-q^{n+1})_{l-1}; l = 0 means one inverse factor
        if (ell >= 1) {
            const auto c = (variant == GSigmaVariant::LM1) ? ring.neg(ring.one()) : ring.one();
            for (long long k = 0; k <= ell - 2; ++k)
                if (n + 1 + k < static_cast<long long>(len))
                    inner.mul_binomial_inplace(n + 1 + k, c);
        } else {
            const auto c = (variant == GSigmaVariant::LM1) ? ring.neg(ring.one()) : ring.one();
            inner.div_binomial_inplace(n, c);
        }
        bool negate;
        if (variant == GSigmaVariant::LM1)
            negate = ((n + ell) % 2 == 0); // -(-1)^{n+l}
        else
            negate = (n % 2 != 0); // +(-1)^n
        Series<R> contrib = OffsetSeries<R>(lo + pre, std::move(inner)).to_series(order);
        acc.add_scaled_shifted(contrib, 0, negate ? ring.neg(ring.one()) : ring.one());
    }
    div_neg_q_inf_inplace(acc);
    return acc;
}

// ---------------------------------------------------------------------------
// Garrett-Ismail-Stanton identity (generalized Rogers-Ramanujan)

// c_l and d_l, the Laurent-polynomial correction factors.
template <class R>
std::pair<LaurentPoly<R>, LaurentPoly<R>> gis_polys(const R& ring, long long ell) {
    LaurentPoly<R> c(ring), d(ring);
    for (long long j = -(ell + 3); j <= ell + 3; ++j) {
        const auto sign = (((j % 2) + 2) % 2 == 0) ? ring.one() : ring.neg(ring.one());
        const long long fc = floor_div(ell + 1 - 5 * j, 2);
        if (fc >= 0 && fc <= ell - 1) {
            auto g = gaussian_binomial_poly(ring, ell - 1, fc);
            c = c + g.shifted(j * (5 * j - 3) / 2).scaled(sign);
        }
        const long long fd = floor_div(ell - 1 - 5 * j, 2);
        if (fd >= 0 && fd <= ell - 1) {
            auto g = gaussian_binomial_poly(ring, ell - 1, fd);
            d = d + g.shifted(j * (5 * j + 1) / 2).scaled(sign);
        }
    }
    return {c, d};
}

// RHS of the generalized Rogers-Ramanujan identity, assembled from c_l, d_l
// and the two level-5 infinite products; asserts the result is a power series.
template <class R>
Series<R> gis_rhs(const R& ring, std::size_t order, long long ell) {
    if (ell < 1) throw std::invalid_argument("gis_rhs: needs ell >= 1 (use rr1 at ell = 0)");
    const long long shift = ell * (ell - 1) / 2;
    const std::size_t len = order + static_cast<std::size_t>(shift);
    Series<R> A = (pochhammer_q(ring, 1, 5, kInfiniteCount, len) *
                   pochhammer_q(ring, 4, 5, kInfiniteCount, len))
                      .inverse();
    Series<R> B = (pochhammer_q(ring, 2, 5, kInfiniteCount, len) *
                   pochhammer_q(ring, 3, 5, kInfiniteCount, len))
                      .inverse();
    const auto [c, d] = gis_polys(ring, ell);
    Series<R> num(ring, len);
    for (const auto& [e, v] : c.support()) num.add_scaled_shifted(A, e, v);
    for (const auto& [e, v] : d.support()) num.add_scaled_shifted(B, e, ring.neg(v));
    const auto sign = (ell % 2 == 0) ? ring.one() : ring.neg(ring.one());
    return OffsetSeries<R>(-shift, num.scaled(sign)).to_series(order);
}

// ---------------------------------------------------------------------------
// tenth-order mock theta functions and the Hauptmodul j_5

enum class Mock10 { X, Chi };

// X(q) = sum (-1)^n q^{n^2} / (-q)_{2n},  chi(q) = sum (-1)^n q^{(n+1)^2} / (-q)_{2n+1}.
// from_zero selects the n >= 0 convention (the Remark's standard definition);
// otherwise the sum starts at n = 1 as in the Theorem display.
template <class R>
Series<R> mock10(const R& ring, std::size_t order, Mock10 which, bool from_zero) {
    Series<R> r(ring, order);
    Series<R> inv = Series<R>::one(ring, order); // 1/(-q)_k, k grown as needed
    long long k = 0;
    auto grow = [&](long long upto) {
        for (; k < upto; ) {
            ++k;
            if (k < static_cast<long long>(order)) inv.div_binomial_inplace(k, ring.one());
        }
    };
    for (long long n = 0;; ++n) {
        const long long e = (which == Mock10::X) ? n * n : (n + 1) * (n + 1);
        if (e >= static_cast<long long>(order) && n > 0) break;
        grow((which == Mock10::X) ? 2 * n : 2 * n + 1);
        if (n == 0 && !from_zero) continue;
        r.add_scaled_shifted(inv, e, (n % 2 == 0) ? ring.one() : ring.neg(ring.one()));
    }
    return r;
}

// j_5 = q^{-1} (q;q)_inf^6 / (q^5;q^5)_inf^6 = 1/q - 6 + sum_{n>=1} c5(n) q^n.
// The q^{-1} coefficient is returned separately; series[n] holds the
// coefficient of q^n for n >= 0 (so series[0] == -6).
template <class R>
struct Hauptmodul5 {
    typename R::Value leading; // coefficient of q^{-1}
    Series<R> series;
};

template <class R>
Hauptmodul5<R> hauptmodul_j5(const R& ring, std::size_t order) {
    Series<R> p = Series<R>::one(ring, order + 1);
    const auto e1 = euler_product_sparse(ring, 1, order + 1);
    const auto e5 = euler_product_sparse(ring, 5, order + 1);
    for (int i = 0; i < 6; ++i) p.mul_sparse_inplace(e1);
    for (int i = 0; i < 6; ++i) p.div_sparse_inplace(e5);
    Series<R> tail(ring, order);
    for (std::size_t i = 0; i < order; ++i) tail.set(i, p[i + 1]);
    return {p[0], std::move(tail)};
}

// ---------------------------------------------------------------------------
// unrestricted Rascoe / non-Rascoe generating functions (section "analogues")

template <class R>
struct UnrestrictedGfs {
    Series<R> c_double;  // double sum for c(n)
    Series<R> c_closed;  // q / (q^2;q)_inf
    Series<R> e_double;  // double sum for e(n)
    Series<R> e_closed;  // (1 - q + q^2) / (q)_inf
};

template <class R>
UnrestrictedGfs<R> unrestricted_gfs(const R& ring, std::size_t order) {
    const long long N = static_cast<long long>(order);
    Series<R> cd(ring, order), ed(ring, order);
    cd.add_term(1, ring.one()); // the n = 1 partition "1"
    ed.add_term(0, ring.one()); // the empty partition
    for (long long e = 2; e < N; ++e) ed.add_term(e, ring.one()); // q^2/(1-q)
    // inner index m only contributes while mn + n < N with n >= 2
    const auto invq = poch_inverses(ring, N / 2 + 1, order);
    for (long long n = 2; n < N; ++n) {
        for (long long m = 0; m <= n; ++m) {
            const long long ec = m * n + 2 * n - 1;
            if (ec < N) {
                Series<R> g = qbinom_truncated(ring, 2 * n - m - 2, n - m - 1,
                                               static_cast<std::size_t>(N - ec));
                if (!g.is_zero()) {
                    g = g * invq[static_cast<std::size_t>(m)].truncated(g.order());
                    cd.add_scaled_shifted(g, ec, ring.one());
                }
            }
            const long long ee = m * n + n;
            if (ee < N) {
                Series<R> g = qbinom_truncated(ring, 2 * n - m - 2, n - m,
                                               static_cast<std::size_t>(N - ee));
                if (!g.is_zero()) {
                    g = g * invq[static_cast<std::size_t>(m)].truncated(g.order());
                    ed.add_scaled_shifted(g, ee, ring.one());
                }
            }
            if (ec >= N && ee >= N) break;
        }
    }
    Series<R> cc = pochhammer_q(ring, 2, 1, kInfiniteCount, order).inverse().shifted(1);
    Series<R> ec = euler_product(ring, 1, order).inverse();
    Series<R> pre(ring, order);
    pre.add_term(0, ring.one());
    pre.add_term(1, ring.neg(ring.one()));
    pre.add_term(2, ring.one());
    ec = ec * pre;
    return {std::move(cd), std::move(cc), std::move(ed), std::move(ec)};
}

// The sum-side originally stated for a(N):
// sum_{n>=1} q^{n(n+1)/2} (q)_{n-1} sum_{m=1}^n q^{m(m-1)} / ((q)_{n-m} (q)_{m-1}^2)
template <class R>
Series<R> rascoe_original_sum(const R& ring, std::size_t order) {
    Series<R> r(ring, order);
    long long nmax = 1;
    while (nmax * (nmax + 1) / 2 < static_cast<long long>(order)) ++nmax;
    const auto invq = poch_inverses(ring, nmax, order);
    std::vector<Series<R>> invq2;
    invq2.reserve(static_cast<std::size_t>(nmax) + 1);
    for (long long k = 0; k <= nmax; ++k)
        invq2.push_back(invq[static_cast<std::size_t>(k)] * invq[static_cast<std::size_t>(k)]);
    for (long long n = 1; n * (n + 1) / 2 < static_cast<long long>(order); ++n) {
        Series<R> inner(ring, order);
        for (long long m = 1; m <= n; ++m) {
            const long long e = m * (m - 1);
            if (n * (n + 1) / 2 + e >= static_cast<long long>(order)) break;
            inner.add_scaled_shifted(invq[static_cast<std::size_t>(n - m)] *
                                         invq2[static_cast<std::size_t>(m - 1)],
                                     e, ring.one());
        }
        inner = inner * pochhammer_q(ring, 1, 1, n - 1, order);
        r.add_scaled_shifted(inner, n * (n + 1) / 2, ring.one());
    }
    return r;
}

// ---------------------------------------------------------------------------
// the two q-identities with Laurent sides and the page-27 modular relation
//
// Sides that genuinely dip below q^0 are returned as q^shift * side, both
// members shifted by the same amount, so coefficientwise comparison is
// unaffected. eq63 works in x with q = x^2 (to house q^{l/2}); page27 works
// in x with q = x^4 (to house q^{n^2/4}).

template <class R>
struct ShiftedSidePair {
    long long shift; // both series represent q^shift (or x^shift) times a side
    Series<R> lhs;
    Series<R> rhs;
};

// Running partial sums F_j = sum_{k=0}^{j} (-1)^k / (q)_k, advanced on demand.
template <class R>
class AlternatingPochSums {
public:
    AlternatingPochSums(const R& ring, std::size_t order)
        : inv_(Series<R>::one(ring, order)), acc_(inv_), k_(0) {}

    const Series<R>& upto(long long j) {
        const R& ring = acc_.ring();
        while (k_ < j) {
            ++k_;
            if (k_ < static_cast<long long>(inv_.order()))
                inv_.div_binomial_inplace(k_, ring.neg(ring.one()));
            acc_.add_scaled_shifted(inv_, 0,
                                    (k_ % 2 == 0) ? ring.one() : ring.neg(ring.one()));
        }
        return acc_;
    }

private:
    Series<R> inv_;
    Series<R> acc_;
    long long k_;
};

// Both sides of the first identity relating sigma_2,l and sigma_2,l+1,
// as q^s * side with s = floor(l^2/4).
template <class R>
ShiftedSidePair<R> eq62_sides(const R& ring, std::size_t order, long long ell) {
    const long long s = ell * ell / 4; // covers min of n^2 - n*ell
    const std::size_t L = order + static_cast<std::size_t>(s);
    const long long LL = static_cast<long long>(L);

    // q^s * sum_n (-1)^n q^{n^2 - n ell} / (q)_{2n} and the (q)_{2n+1} twin
    Series<R> s1(ring, L), s2(ring, L);
    {
        Series<R> inv = Series<R>::one(ring, L); // 1/(q)_{2n}
        const auto minus_one = ring.neg(ring.one());
        for (long long n = 0;; ++n) {
            if (n >= 1)
                for (long long k = 2 * n - 1; k <= 2 * n; ++k)
                    if (k < LL) inv.div_binomial_inplace(k, minus_one);
            const long long e1 = n * n - n * ell + s;
            const long long e2 = (n + 1) * (n + 1) - n * ell + s;
            if (e1 >= LL && e2 >= LL && n > ell) break;
            const auto sign = (n % 2 == 0) ? ring.one() : ring.neg(ring.one());
            if (e1 < LL) s1.add_scaled_shifted(inv, e1, sign);
            Series<R> inv2 = inv;
            if (2 * n + 1 < LL) inv2.div_binomial_inplace(2 * n + 1, minus_one);
            if (e2 < LL) s2.add_scaled_shifted(inv2, e2, sign);
        }
    }
    Series<R> lhs = sigma2_ell(ring, L, ell) * s1 - sigma2_ell(ring, L, ell + 1) * s2;

    // q^s * { theta / (-q)_inf - 2 sum_{n>=1} (-1)^n q^{n^2 - n ell} F_{2n-1} }
    Series<R> theta(ring, L);
    long long B = ell + 1;
    while (B * B - B * ell + s < LL) ++B; // past B, both wings exceed the order
    for (long long n = -B; n <= B; ++n)
        theta.add_term(n * n - n * ell + s,
                       (((n % 2) + 2) % 2 == 0) ? ring.one() : ring.neg(ring.one()));
    div_neg_q_inf_inplace(theta);
    Series<R> rhs = theta;
    AlternatingPochSums<R> partial(ring, L);
    const auto minus_two = ring.from_int(-2);
    for (long long n = 1;; ++n) {
        const long long e = n * n - n * ell + s;
        if (e >= LL && n > ell) break;
        if (e >= LL) continue;
        const auto c = (n % 2 == 0) ? minus_two : ring.from_int(2);
        rhs.add_scaled_shifted(partial.upto(2 * n - 1), e, c);
    }
    return {s, std::move(lhs), std::move(rhs)};
}

// Both sides of the companion identity, in x with q = x^2, as x^s * side
// with s = 2*floor((l-1)^2/4).
template <class R>
ShiftedSidePair<R> eq63_sides(const R& ring, std::size_t order, long long ell) {
    const long long s = 2 * ((ell - 1) * (ell - 1) / 4); // covers min of 2(n^2+n-n*ell)
    const std::size_t L = order + static_cast<std::size_t>(s);
    const long long LL = static_cast<long long>(L);

    // x^s * sum_n (-1)^n x^{2(n^2+n-n ell)} / (x^2;x^2)_{2n+1}
    // and the /(x^2;x^2)_{2n} twin carrying the extra x^{2 ell} that the
    // imaginary-part extraction hands to the second double sum
    Series<R> s3(ring, L), s4(ring, L);
    {
        Series<R> inv = Series<R>::one(ring, L); // 1/(x^2;x^2)_{2n}
        const auto minus_one = ring.neg(ring.one());
        for (long long n = 0;; ++n) {
            if (n >= 1)
                for (long long k = 2 * n - 1; k <= 2 * n; ++k)
                    if (2 * k < LL) inv.div_binomial_inplace(2 * k, minus_one);
            const long long e = 2 * (n * n + n - n * ell) + s;
            if (e >= LL && n > ell) break;
            const auto sign = (n % 2 == 0) ? ring.one() : ring.neg(ring.one());
            if (e + 2 * ell < LL) s4.add_scaled_shifted(inv, e + 2 * ell, sign);
            Series<R> inv2 = inv;
            if (2 * (2 * n + 1) < LL) inv2.div_binomial_inplace(2 * (2 * n + 1), minus_one);
            if (e < LL) s3.add_scaled_shifted(inv2, e, sign);
        }
    }
    const std::size_t half = L / 2 + 1;
    Series<R> a = sigma2_ell(ring, half, ell).substitute_power(2, L);
    Series<R> b = sigma2_ell(ring, half, ell + 1).substitute_power(2, L);
    Series<R> lhs = a * s3 + b * s4;

    // x^s * { -theta/(-x^2;x^2)_inf + 2 sum_{n>=0} (-1)^n x^{2(n^2+n-n ell)} F_{2n}(x^2) }
    Series<R> theta(ring, L);
    long long B = ell + 1;
    while (2 * (B * B + B - B * ell) + s < LL) ++B;
    for (long long n = -B; n <= B; ++n)
        theta.add_term(2 * (n * n + n - n * ell) + s,
                       (((n % 2) + 2) % 2 == 0) ? ring.neg(ring.one()) : ring.one());
    theta.mul_sparse_inplace(euler_product_sparse(ring, 2, L));
    theta.div_sparse_inplace(euler_product_sparse(ring, 4, L));
    Series<R> rhs = theta;
    AlternatingPochSums<R> partial_q(ring, half);
    for (long long n = 0;; ++n) {
        const long long e = 2 * (n * n + n - n * ell) + s;
        if (e >= LL && n > ell) break;
        if (e >= LL) continue;
        const auto c = (n % 2 == 0) ? ring.from_int(2) : ring.from_int(-2);
        rhs.add_scaled_shifted(partial_q.upto(2 * n).substitute_power(2, L), e, c);
    }
    return {s, std::move(lhs), std::move(rhs)};
}

// Both sides of the page-27 modular relation, in x with q = x^4;
// a must be nonzero, and both sides are plain power series in x.
template <class R>
std::pair<Series<R>, Series<R>> page27_sides(const R& ring, std::size_t order,
                                             const typename R::Value& a,
                                             const typename R::Value& b) {
    if (ring.is_zero(a)) throw std::invalid_argument("page27_sides: a must be nonzero");
    const long long LL = static_cast<long long>(order);
    const auto ainv = ring.inv(a);
    const auto ab = ring.mul(a, b);

    // sum_n (ab)^n x^{n^2} / (x^4;x^4)_n and the x^{(n+1)^2} twin
    Series<R> t1(ring, order), t2(ring, order);
    {
        Series<R> inv = Series<R>::one(ring, order);
        typename R::Value c = ring.one(); // (ab)^n
        for (long long n = 0;; ++n) {
            if (n >= 1) {
                if (4 * n < LL) inv.div_binomial_inplace(4 * n, ring.neg(ring.one()));
                c = ring.mul(c, ab);
            }
            if (n * n >= LL && n > 0) break;
            t1.add_scaled_shifted(inv, n * n, c);
            if ((n + 1) * (n + 1) < LL) t2.add_scaled_shifted(inv, (n + 1) * (n + 1), c);
        }
    }
    // sum_m a^{-2m} x^{4m^2} / (bx^4;x^4)_m and the a^{-2m-1} x^{4m^2+4m} twin
    Series<R> u1(ring, order), u2(ring, order);
    {
        Series<R> inv = Series<R>::one(ring, order);
        typename R::Value c = ring.one(); // a^{-2m}
        for (long long m = 0;; ++m) {
            if (m >= 1) {
                if (4 * m < LL) inv.div_binomial_inplace(4 * m, ring.neg(b));
                c = ring.mul(c, ring.mul(ainv, ainv));
            }
            if (4 * m * m >= LL && m > 0) break;
            u1.add_scaled_shifted(inv, 4 * m * m, c);
            if (4 * m * m + 4 * m < LL)
                u2.add_scaled_shifted(inv, 4 * m * m + 4 * m, ring.mul(c, ainv));
        }
    }
    Series<R> lhs = u1 * t1 + u2 * t2;

    // theta / (bx^4;x^4)_inf
    Series<R> theta(ring, order);
    {
        typename R::Value ap = ring.one(), an = ring.one();
        for (long long n = 0; n * n < LL; ++n) {
            if (n >= 1) {
                ap = ring.mul(ap, a);
                an = ring.mul(an, ainv);
                theta.add_term(n * n, an);
            }
            theta.add_term(n * n, n == 0 ? ring.one() : ap);
        }
    }
    Series<R> binf = pochhammer(ring, b, 4, 4, kInfiniteCount, order);
    Series<R> rhs = theta * binf.inverse();

    // -(1-b) sum_{n>=1} a^n x^{n^2} sum_{k=0}^{n-1} b^k/(x^4;x^4)_k
    const auto bm1 = ring.sub(b, ring.one()); // -(1-b)
    if (!ring.is_zero(bm1)) {
        Series<R> inv = Series<R>::one(ring, order);
        Series<R> partial = inv; // sum_{k<=j} b^k/(q)_k, j = 0 so far
        long long j = 0;
        typename R::Value bk = ring.one(), ap = ring.one();
        for (long long n = 1; n * n < LL; ++n) {
            while (j < n - 1) {
                ++j;
                if (4 * j < LL) inv.div_binomial_inplace(4 * j, ring.neg(ring.one()));
                bk = ring.mul(bk, b);
                partial.add_scaled_shifted(inv, 0, bk);
            }
            ap = ring.mul(ap, a);
            rhs.add_scaled_shifted(partial, n * n, ring.mul(bm1, ap));
        }
    }
    return {std::move(lhs), std::move(rhs)};
}

} // namespace qseries
