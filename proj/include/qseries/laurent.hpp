#pragma once

// Finitely supported Laurent polynomials: exponent -> coefficient, negative
// exponents allowed, zero coefficients never stored.

#include "qseries/rings.hpp"

#include <map>
#include <utility>

namespace qseries {

template <class R>
class LaurentPoly {
public:
    using Value = typename R::Value;
    using Support = std::map<long long, Value>;

    explicit LaurentPoly(R ring) : ring_(std::move(ring)) {}

    static LaurentPoly monomial(R ring, long long e, const Value& c) {
        LaurentPoly p(std::move(ring));
        p.add_term(e, c);
        return p;
    }

    const R& ring() const { return ring_; }
    const Support& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }

    Value coeff(long long e) const {
        auto it = support_.find(e);
        return it == support_.end() ? ring_.zero() : it->second;
    }

    void add_term(long long e, const Value& c) {
        if (ring_.is_zero(c)) return;
        auto [it, inserted] = support_.try_emplace(e, c);
        if (!inserted) {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second)) support_.erase(it);
        }
    }

    long long min_exponent() const { return support_.empty() ? 0 : support_.begin()->first; }
    long long max_exponent() const { return support_.empty() ? 0 : support_.rbegin()->first; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        require_same_ring(a.ring_, b.ring_);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.support_) r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        require_same_ring(a.ring_, b.ring_);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.support_) r.add_term(e, a.ring_.neg(c));
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        require_same_ring(a.ring_, b.ring_);
        LaurentPoly r(a.ring_);
        for (const auto& [ea, ca] : a.support_)
            for (const auto& [eb, cb] : b.support_)
                r.add_term(ea + eb, a.ring_.mul(ca, cb));
        return r;
    }

    LaurentPoly scaled(const Value& c) const {
        LaurentPoly r(ring_);
        for (const auto& [e, v] : support_) r.add_term(e, ring_.mul(v, c));
        return r;
    }

    // x^k * this
    LaurentPoly shifted(long long k) const {
        LaurentPoly r(ring_);
        for (const auto& [e, v] : support_) r.add_term(e + k, v);
        return r;
    }

    // Evaluate at an exact point of the ring's fraction behavior; the point
    // must be a unit when negative exponents are present.
    Value evaluate(const Value& x) const {
        Value acc = ring_.zero();
        for (const auto& [e, c] : support_) {
            Value p = ring_.one();
            const Value base = e >= 0 ? x : ring_.inv(x);
            for (long long k = 0; k < (e >= 0 ? e : -e); ++k) p = ring_.mul(p, base);
            acc = ring_.add(acc, ring_.mul(c, p));
        }
        return acc;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (!a.ring_.compatible(b.ring_)) return false;
        if (a.support_.size() != b.support_.size()) return false;
        for (auto ia = a.support_.begin(), ib = b.support_.begin(); ia != a.support_.end();
             ++ia, ++ib)
            if (ia->first != ib->first || !a.ring_.equal(ia->second, ib->second)) return false;
        return true;
    }

private:
    R ring_;
    Support support_;
};

} // namespace qseries
