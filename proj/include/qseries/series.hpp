#pragma once

// Truncated formal power series in q over an exact ring. A series carries
// its truncation order N and stores coefficients of q^0 .. q^{N-1} densely.
// Mixed-order arithmetic truncates to the minimum order. All values are
// immutable from the caller's point of view; the in-place *_inplace helpers
// are the building blocks the evaluators use on their own locals.

#include "qseries/rings.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace qseries {

// Sparse series term list: (exponent, coefficient), exponents strictly
// increasing, used for pentagonal-theorem products and similar.
template <class R>
using SparseTerms = std::vector<std::pair<long long, typename R::Value>>;

template <class R>
class Series {
public:
    using Value = typename R::Value;

    Series(R ring, std::size_t order)
        : ring_(std::move(ring)), coeffs_(order, ring_.zero()) {}

    static Series constant(R ring, long long c, std::size_t order) {
        Series s(ring, order);
        if (order > 0) s.coeffs_[0] = s.ring_.from_int(c);
        return s;
    }

    static Series one(R ring, std::size_t order) { return constant(ring, 1, order); }

    const R& ring() const { return ring_; }
    std::size_t order() const { return coeffs_.size(); }

    const Value& operator[](std::size_t i) const { return coeffs_.at(i); }
    void set(std::size_t i, Value v) { coeffs_.at(i) = std::move(v); }

    const std::vector<Value>& coeffs() const { return coeffs_; }

    Series truncated(std::size_t n) const {
        Series r(ring_, std::min(n, order()));
        for (std::size_t i = 0; i < r.order(); ++i) r.coeffs_[i] = coeffs_[i];
        return r;
    }

    // q^e * this, truncated to the same order. e >= 0.
    Series shifted(long long e) const {
        Series r(ring_, order());
        for (std::size_t i = static_cast<std::size_t>(e); i < order(); ++i)
            r.coeffs_[i] = coeffs_[i - static_cast<std::size_t>(e)];
        return r;
    }

    Series scaled(const Value& c) const {
        Series r(ring_, order());
        for (std::size_t i = 0; i < order(); ++i) r.coeffs_[i] = ring_.mul(coeffs_[i], c);
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        require_same_ring(a.ring_, b.ring_);
        Series r(a.ring_, std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i)
            r.coeffs_[i] = a.ring_.add(a.coeffs_[i], b.coeffs_[i]);
        return r;
    }

    friend Series operator-(const Series& a, const Series& b) {
        require_same_ring(a.ring_, b.ring_);
        Series r(a.ring_, std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i)
            r.coeffs_[i] = a.ring_.sub(a.coeffs_[i], b.coeffs_[i]);
        return r;
    }

    friend Series operator-(const Series& a) {
        Series r(a.ring_, a.order());
        for (std::size_t i = 0; i < r.order(); ++i) r.coeffs_[i] = a.ring_.neg(a.coeffs_[i]);
        return r;
    }

    // Cauchy product truncated to min order.
    friend Series operator*(const Series& a, const Series& b) {
        require_same_ring(a.ring_, b.ring_);
        const std::size_t n = std::min(a.order(), b.order());
        Series r(a.ring_, n);
        for (std::size_t i = 0; i < n && i < a.order(); ++i) {
            if (a.ring_.is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j < n && j < b.order(); ++j)
                r.coeffs_[i + j] =
                    a.ring_.add(r.coeffs_[i + j], a.ring_.mul(a.coeffs_[i], b.coeffs_[j]));
        }
        return r;
    }

    void add_inplace(const Series& b) {
        require_same_ring(ring_, b.ring_);
        const std::size_t n = std::min(order(), b.order());
        for (std::size_t i = 0; i < n; ++i) coeffs_[i] = ring_.add(coeffs_[i], b.coeffs_[i]);
    }

    // Add c * q^e, ignored if e >= order.
    void add_term(long long e, const Value& c) {
        if (e >= 0 && static_cast<std::size_t>(e) < order())
            coeffs_[static_cast<std::size_t>(e)] =
                ring_.add(coeffs_[static_cast<std::size_t>(e)], c);
    }

    // this += c * q^e * s, clipped to [0, order).
    void add_scaled_shifted(const Series& s, long long e, const Value& c) {
        require_same_ring(ring_, s.ring());
        for (std::size_t i = 0; i < s.order(); ++i) {
            const long long k = e + static_cast<long long>(i);
            if (k < 0) continue;
            if (k >= static_cast<long long>(order())) break;
            coeffs_[static_cast<std::size_t>(k)] =
                ring_.add(coeffs_[static_cast<std::size_t>(k)], ring_.mul(c, s[i]));
        }
    }

    // Multiply by (1 + a q^k), k >= 1: O(N).
    void mul_binomial_inplace(long long k, const Value& a) {
        for (std::size_t i = order(); i-- > static_cast<std::size_t>(k);)
            coeffs_[i] = ring_.add(coeffs_[i],
                                   ring_.mul(a, coeffs_[i - static_cast<std::size_t>(k)]));
    }

    // Divide by (1 + a q^k), k >= 1: O(N).
    void div_binomial_inplace(long long k, const Value& a) {
        for (std::size_t i = static_cast<std::size_t>(k); i < order(); ++i)
            coeffs_[i] = ring_.sub(coeffs_[i],
                                   ring_.mul(a, coeffs_[i - static_cast<std::size_t>(k)]));
    }

    void mul_sparse_inplace(const SparseTerms<R>& f) {
        Series r(ring_, order());
        for (const auto& [e, c] : f) {
            if (e < 0 || static_cast<std::size_t>(e) >= order()) continue;
            for (std::size_t i = 0; i + static_cast<std::size_t>(e) < order(); ++i)
                if (!ring_.is_zero(coeffs_[i]))
                    r.coeffs_[i + static_cast<std::size_t>(e)] = ring_.add(
                        r.coeffs_[i + static_cast<std::size_t>(e)], ring_.mul(c, coeffs_[i]));
        }
        coeffs_ = std::move(r.coeffs_);
    }

    // Divide by a sparse series whose lowest term is 1*q^0.
    void div_sparse_inplace(const SparseTerms<R>& f) {
        if (f.empty() || f.front().first != 0 || !ring_.equal(f.front().second, ring_.one()))
            throw std::invalid_argument("div_sparse: divisor must have constant term 1");
        for (std::size_t i = 0; i < order(); ++i) {
            Value v = coeffs_[i];
            for (std::size_t t = 1; t < f.size(); ++t) {
                const long long e = f[t].first;
                if (e > static_cast<long long>(i)) break;
                v = ring_.sub(v, ring_.mul(f[t].second, coeffs_[i - static_cast<std::size_t>(e)]));
            }
            coeffs_[i] = v;
        }
    }

    // Multiplicative inverse to order N; requires a unit constant term.
    Series inverse() const {
        if (order() == 0) return *this;
        const Value c0inv = ring_.inv(coeffs_[0]); // throws on non-unit
        Series r(ring_, order());
        r.coeffs_[0] = c0inv;
        for (std::size_t i = 1; i < order(); ++i) {
            Value acc = ring_.zero();
            for (std::size_t j = 1; j <= i; ++j)
                acc = ring_.add(acc, ring_.mul(coeffs_[j], r.coeffs_[i - j]));
            r.coeffs_[i] = ring_.neg(ring_.mul(c0inv, acc));
        }
        return r;
    }

    // a(q^t) truncated at new_order.
    Series substitute_power(long long t, std::size_t new_order) const {
        Series r(ring_, new_order);
        for (std::size_t i = 0; i < order(); ++i) {
            const unsigned long long e = static_cast<unsigned long long>(i) * t;
            if (e >= new_order) break;
            r.coeffs_[static_cast<std::size_t>(e)] = coeffs_[i];
        }
        return r;
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!ring_.is_zero(c)) return false;
        return true;
    }

    friend bool operator==(const Series& a, const Series& b) {
        if (!a.ring_.compatible(b.ring_) || a.order() != b.order()) return false;
        for (std::size_t i = 0; i < a.order(); ++i)
            if (!a.ring_.equal(a.coeffs_[i], b.coeffs_[i])) return false;
        return true;
    }

private:
    R ring_;
    std::vector<Value> coeffs_;
};

// q^{offset} * series: the working representation for the Hecke-type and
// bilateral-theta summands whose individual terms dip below q^0.
template <class R>
class OffsetSeries {
public:
    using Value = typename R::Value;

    OffsetSeries(long long offset, Series<R> s) : offset_(offset), series_(std::move(s)) {}

    static OffsetSeries zero(R ring, long long offset, std::size_t length) {
        return OffsetSeries(offset, Series<R>(ring, length));
    }

    long long offset() const { return offset_; }
    const Series<R>& series() const { return series_; }
    const R& ring() const { return series_.ring(); }

    // Exclusive upper exponent bound.
    long long limit() const { return offset_ + static_cast<long long>(series_.order()); }

    Value coeff(long long e) const {
        if (e < offset_ || e >= limit()) return series_.ring().zero();
        return series_[static_cast<std::size_t>(e - offset_)];
    }

    void add_term(long long e, const Value& c) { series_.add_term(e - offset_, c); }

    OffsetSeries& operator+=(const OffsetSeries& b) {
        *this = *this + b;
        return *this;
    }

    friend OffsetSeries operator+(const OffsetSeries& a, const OffsetSeries& b) {
        const long long lo = std::min(a.offset_, b.offset_);
        const long long hi = std::min(a.limit(), b.limit());
        OffsetSeries r = zero(a.ring(), lo, static_cast<std::size_t>(std::max(0LL, hi - lo)));
        for (long long e = lo; e < hi; ++e)
            r.series_.set(static_cast<std::size_t>(e - lo),
                          a.ring().add(a.coeff(e), b.coeff(e)));
        return r;
    }

    friend OffsetSeries operator-(const OffsetSeries& a, const OffsetSeries& b) {
        const long long lo = std::min(a.offset_, b.offset_);
        const long long hi = std::min(a.limit(), b.limit());
        OffsetSeries r = zero(a.ring(), lo, static_cast<std::size_t>(std::max(0LL, hi - lo)));
        for (long long e = lo; e < hi; ++e)
            r.series_.set(static_cast<std::size_t>(e - lo),
                          a.ring().sub(a.coeff(e), b.coeff(e)));
        return r;
    }

    friend OffsetSeries operator*(const OffsetSeries& a, const OffsetSeries& b) {
        return OffsetSeries(a.offset_ + b.offset_, a.series_ * b.series_);
    }

    // Collapse to a plain power series of the given order; throws if a
    // nonzero coefficient sits at a negative exponent.
    Series<R> to_series(std::size_t target_order) const {
        Series<R> r(ring(), target_order);
        for (long long e = offset_; e < limit(); ++e) {
            const Value c = coeff(e);
            if (ring().is_zero(c)) continue;
            if (e < 0)
                throw std::logic_error("negative q-exponent survived series assembly");
            if (static_cast<std::size_t>(e) < target_order)
                r.set(static_cast<std::size_t>(e), c);
        }
        return r;
    }

private:
    long long offset_;
    Series<R> series_;
};

} // namespace qseries
