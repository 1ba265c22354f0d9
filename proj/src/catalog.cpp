#include "qseries/catalog.hpp"

#include "qseries/genfun.hpp"

#include <chrono>
#include <stdexcept>

namespace qseries {

namespace {

template <class R>
std::vector<std::string> coeff_strings(const Series<R>& s) {
    std::vector<std::string> out;
    out.reserve(s.order());
    for (std::size_t i = 0; i < s.order(); ++i) out.push_back(s.ring().to_string(s[i]));
    return out;
}

template <class R>
SidePair plain(const Series<R>& lhs, const Series<R>& rhs) {
    return {0, coeff_strings(lhs), coeff_strings(rhs)};
}

std::string lstr(long long v) { return std::to_string(v); }

// (q^{e0};q^5)_inf (q^{e1};q^5)_inf, optionally times (q^5;q^5)_inf.
template <class R>
Series<R> level5_product(const R& ring, long long e0, long long e1, bool with_eta,
                         std::size_t order) {
    Series<R> s = pochhammer_q(ring, e0, 5, kInfiniteCount, order) *
                  pochhammer_q(ring, e1, 5, kInfiniteCount, order);
    if (with_eta) s.mul_sparse_inplace(euler_product_sparse(ring, 5, order));
    return s;
}

// Both sides of the mod-2 congruence for b_ell as q^{ell(ell-1)/2} * side.
SidePair lcong_sides(long long ell, std::size_t order) {
    const ModularRing ring(2);
    const long long s = ell * (ell - 1) / 2;
    const std::size_t L = order + static_cast<std::size_t>(s);

    Series<ModularRing> lhs(ring, L);
    {
        const Series<ModularRing> b = nonrascoe_gf(ring, order, ell);
        for (std::size_t i = 0; i < order; ++i) lhs.set(i + static_cast<std::size_t>(s), b[i]);
    }

    // triple sum rebuilt from box-partition counts: for each j the inner
    // k-sum is sum_k p(ell-1-f, f, k) q^k, paired with a bilateral theta.
    // f = 0 always contributes 1 at k = 0 (an empty box), even for ell = 0.
    Series<ModularRing> C(ring, L), D(ring, L);
    auto add_box = [&](Series<ModularRing>& dst, long long f, long long e) {
        if (f == 0) {
            dst.add_term(e, ring.one());
            return;
        }
        if (f < 0 || f > ell - 1) return;
        for (long long k = 0; k <= (ell - 1 - f) * f; ++k)
            dst.add_term(e + k, ring.from_integer(partitions_in_box(ell - 1 - f, f, k)));
    };
    for (long long j = -(ell + 3); j <= ell + 3; ++j) {
        add_box(C, floor_div(ell + 1 - 5 * j, 2), j * (5 * j - 3) / 2);
        add_box(D, floor_div(ell - 1 - 5 * j, 2), j * (5 * j + 1) / 2);
    }
    Series<ModularRing> rhs =
        C * jacobi_sum(ring, 5, 1, L) + D * jacobi_sum(ring, 5, -3, L);
    return {s, coeff_strings(lhs), coeff_strings(rhs)};
}

std::vector<SeriesIdentity> build_catalog() {
    std::vector<SeriesIdentity> cat;
    const IntegerRing zr;
    const RationalRing qr;

    auto add = [&cat](std::string id, std::map<std::string, std::string> params,
                      std::size_t order, std::function<SidePair(std::size_t)> f) {
        cat.push_back({std::move(id), std::move(params), order, std::move(f)});
    };

    // --- representation-agreement family for sigma_2,l -----------------
    for (auto variant : {HeckeVariant::I, HeckeVariant::II}) {
        const std::string tag = variant == HeckeVariant::I ? "i" : "ii";
        add("hecke[" + tag + "]", {{"variant", tag}}, 200, [=](std::size_t N) {
            return plain(sigma2_ell(zr, N, 0), hecke_rep(zr, N, variant));
        });
    }
    for (long long ell = 0; ell <= 3; ++ell) {
        add("lm1[l=" + lstr(ell) + "]", {{"l", lstr(ell)}}, 200, [=](std::size_t N) {
            return plain(sigma2_ell(zr, N, ell), gsigma_rep(zr, N, ell, GSigmaVariant::LM1));
        });
        add("lm2[l=" + lstr(ell) + "]", {{"l", lstr(ell)}}, 200, [=](std::size_t N) {
            return plain(sigma2_ell(zr, N, ell), gsigma_rep(zr, N, ell, GSigmaVariant::LM2));
        });
        add("conj1[l=" + lstr(ell) + "]", {{"l", lstr(ell)}, {"z", "-1"}}, 200,
            [=](std::size_t N) {
                const auto z = zr.from_int(-1);
                return plain(sigma2_ell(zr, N, ell), conj_rhs_small1(zr, N, ell, z));
            });
        add("sigma-doublesum[l=" + lstr(ell) + "]", {{"l", lstr(ell)}}, 200,
            [=](std::size_t N) {
                return plain(sigma2_ell(zr, N, ell), sigma2_from_double_sum(zr, N, ell));
            });
    }
    add("conj2", {{"l", "0"}, {"z", "-1"}}, 200, [=](std::size_t N) {
        return plain(sigma2_ell(zr, N, 0), conj_rhs_small2(zr, N, zr.from_int(-1)));
    });

    // --- the main theorem and its relatives -----------------------------
    for (long long ell = 0; ell <= 3; ++ell) {
        add("theorem-main[l=" + lstr(ell) + "]", {{"l", lstr(ell)}}, 200,
            [=](std::size_t N) {
                return plain(nonrascoe_gf(zr, N, ell), nonrascoe_double_sum(zr, N, ell));
            });
        add("rascoe-complement[l=" + lstr(ell) + "]", {{"l", lstr(ell)}}, 200,
            [=](std::size_t N) {
                Series<IntegerRing> total =
                    rascoe_double_sum(zr, N, ell) + nonrascoe_double_sum(zr, N, ell);
                return plain(total, pochhammer(zr, zr.from_int(-1), 1, 1, kInfiniteCount, N));
            });
    }
    add("nonrascoe-product-form", {}, 200, [=](std::size_t N) {
        return plain(nonrascoe_gf(zr, N, 0), nonrascoe_product_form(zr, N));
    });
    add("rascoe-original", {}, 200, [=](std::size_t N) {
        return plain(rascoe_double_sum(zr, N, 0), rascoe_original_sum(zr, N));
    });

    // --- classical anchors ----------------------------------------------
    add("rr1", {}, 200, [=](std::size_t N) {
        return plain(rr_sum(zr, N, 0), level5_product(zr, 1, 4, false, N).inverse());
    });
    add("jtpi1", {}, 200, [=](std::size_t N) {
        return plain(jacobi_sum(zr, 5, 1, N), level5_product(zr, 2, 3, true, N));
    });
    add("jtpi2", {}, 200, [=](std::size_t N) {
        return plain(jacobi_sum(zr, 5, -3, N), level5_product(zr, 1, 4, true, N));
    });
    for (long long ell = 1; ell <= 6; ++ell)
        add("gis[l=" + lstr(ell) + "]", {{"l", lstr(ell)}}, 200, [=](std::size_t N) {
            return plain(rr_sum(zr, N, ell), gis_rhs(zr, N, ell));
        });

    // --- unrestricted analogues ------------------------------------------
    add("ra1", {}, 150, [=](std::size_t N) {
        const auto g = unrestricted_gfs(zr, N);
        return plain(g.c_double, g.c_closed);
    });
    add("ra2", {}, 150, [=](std::size_t N) {
        const auto g = unrestricted_gfs(zr, N);
        return plain(g.e_double, g.e_closed);
    });
    add("c-plus-e", {}, 150, [=](std::size_t N) {
        const auto g = unrestricted_gfs(zr, N);
        return plain(g.c_closed + g.e_closed, euler_product(zr, 1, N).inverse());
    });

    // --- mod-2 congruence for b_ell ---------------------------------------
    for (long long ell = 0; ell <= 6; ++ell)
        add("lcong[l=" + lstr(ell) + "]", {{"l", lstr(ell)}, {"mod", "2"}}, 200,
            [=](std::size_t N) { return lcong_sides(ell, N); });

    // --- the Laurent-sided identities and the page-27 relation ------------
    for (long long ell = 0; ell <= 4; ++ell) {
        add("eq62[l=" + lstr(ell) + "]", {{"l", lstr(ell)}}, 120, [=](std::size_t N) {
            const auto p = eq62_sides(zr, N, ell);
            return SidePair{p.shift, coeff_strings(p.lhs), coeff_strings(p.rhs)};
        });
        add("eq63[l=" + lstr(ell) + "]", {{"l", lstr(ell)}, {"var", "x, q=x^2"}}, 120,
            [=](std::size_t N) {
                const auto p = eq63_sides(zr, N, ell);
                return SidePair{p.shift, coeff_strings(p.lhs), coeff_strings(p.rhs)};
            });
    }
    const std::vector<std::pair<BigRational, BigRational>> page27_samples = {
        {BigRational(1), BigRational(0)},
        {BigRational(2), BigRational(-1)},
        {BigRational(1), BigRational(1)},
        {BigRational(1, 2), BigRational(2, 3)},
    };
    for (const auto& [a, b] : page27_samples)
        add("page27[a=" + a.str() + ",b=" + b.str() + "]",
            {{"a", a.str()}, {"b", b.str()}, {"var", "x, q=x^4"}}, 80,
            [=](std::size_t N) {
                const RationalRing ring;
                auto [lhs, rhs] = page27_sides(ring, N, a, b);
                return plain(lhs, rhs);
            });
    (void)qr;
    return cat;
}

IdentityReport compare_sides(const SeriesIdentity& entry, const SidePair& sides,
                             std::size_t order, std::int64_t ms) {
    IdentityReport r;
    r.id = entry.id;
    r.params = entry.params;
    r.mode = "series-to-order-N";
    r.detail = "order=" + std::to_string(order) + (sides.shift != 0
                   ? ", sides shifted by q^" + std::to_string(sides.shift)
                   : "");
    r.ms = ms;
    const std::size_t n = std::min(sides.lhs.size(), sides.rhs.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (sides.lhs[i] != sides.rhs[i]) {
            r.pass = false;
            r.witness_index = static_cast<long long>(i) - sides.shift;
            r.witness_lhs = sides.lhs[i];
            r.witness_rhs = sides.rhs[i];
            return r;
        }
    }
    r.pass = true;
    return r;
}

} // namespace

const std::vector<SeriesIdentity>& identity_catalog() {
    static const std::vector<SeriesIdentity> cat = build_catalog();
    return cat;
}

const SeriesIdentity& catalog_entry(const std::string& id) {
    for (const auto& e : identity_catalog())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown identity id: " + id);
}

IdentityReport check_series_identity(const SeriesIdentity& entry, std::size_t order) {
    const auto t0 = std::chrono::steady_clock::now();
    const SidePair sides = entry.sides(order ? order : entry.default_order);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    return compare_sides(entry, sides, order ? order : entry.default_order, ms);
}

IdentityReport check_perturbed(const SeriesIdentity& entry, std::size_t order,
                               std::size_t perturb_at) {
    SidePair sides = entry.sides(order ? order : entry.default_order);
    if (perturb_at >= sides.rhs.size())
        throw std::invalid_argument("perturbation index out of range");
    sides.rhs[perturb_at] = (sides.rhs[perturb_at] == "0") ? "1" : "0";
    return compare_sides(entry, sides, order ? order : entry.default_order, 0);
}

} // namespace qseries
