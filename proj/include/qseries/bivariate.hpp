#pragma once

// Bivariate series: truncated in q, with each q-coefficient a Laurent
// polynomial in z. Used for the rank generating functions, where z tracks
// the rank (which may be -1 at weight 0).

#include "qseries/laurent.hpp"
#include "qseries/series.hpp"

#include <vector>

namespace qseries {

template <class R>
class BivariateSeries {
public:
    using Value = typename R::Value;
    using ZPoly = LaurentPoly<R>;

    BivariateSeries(R ring, std::size_t order)
        : ring_(ring), coeffs_(order, ZPoly(ring)) {}

    const R& ring() const { return ring_; }
    std::size_t order() const { return coeffs_.size(); }

    const ZPoly& q_coeff(std::size_t n) const { return coeffs_.at(n); }

    void add_term(long long qe, long long ze, const Value& c) {
        if (qe < 0 || static_cast<std::size_t>(qe) >= order()) return;
        coeffs_[static_cast<std::size_t>(qe)].add_term(ze, c);
    }

    void add_inplace(const BivariateSeries& b) {
        require_same_ring(ring_, b.ring_);
        const std::size_t n = std::min(order(), b.order());
        for (std::size_t i = 0; i < n; ++i) coeffs_[i] = coeffs_[i] + b.coeffs_[i];
    }

    // Multiply in place by 1/(1 - z q^k), k >= 1.
    void div_z_binomial_inplace(long long k) {
        for (std::size_t i = static_cast<std::size_t>(k); i < order(); ++i)
            coeffs_[i] = coeffs_[i] + coeffs_[i - static_cast<std::size_t>(k)].shifted(1);
    }

    // Multiply in place by z^{ze} q^{qe}, qe >= 0.
    void shift_inplace(long long qe, long long ze) {
        if (qe > 0) {
            for (std::size_t i = order(); i-- > 0;)
                coeffs_[i] = (i >= static_cast<std::size_t>(qe))
                                 ? coeffs_[i - static_cast<std::size_t>(qe)]
                                 : ZPoly(ring_);
        }
        if (ze != 0)
            for (auto& p : coeffs_) p = p.shifted(ze);
    }

    // Substitute an exact ring value for z.
    Series<R> specialize_z(const Value& z) const {
        Series<R> r(ring_, order());
        for (std::size_t i = 0; i < order(); ++i) r.set(i, coeffs_[i].evaluate(z));
        return r;
    }

private:
    R ring_;
    std::vector<ZPoly> coeffs_;
};

} // namespace qseries
