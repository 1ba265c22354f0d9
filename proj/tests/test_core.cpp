#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qseries/genfun.hpp"
#include "qseries/qfunctions.hpp"
#include "qseries/series.hpp"

#include <random>

using namespace qseries;

namespace {

Series<IntegerRing> random_series(std::mt19937& rng, std::size_t order) {
    const IntegerRing zr;
    std::uniform_int_distribution<int> d(-4, 4);
    Series<IntegerRing> s(zr, order);
    for (std::size_t i = 0; i < order; ++i) s.set(i, BigInt(d(rng)));
    return s;
}

} // namespace

TEST_CASE("ring axioms on sampled elements") {
    const IntegerRing zr;
    const RationalRing qr;
    const ModularRing m7(7);
    CHECK(zr.add(zr.from_int(3), zr.from_int(-5)) == BigInt(-2));
    CHECK(qr.mul(qr.from_int(2), BigRational(3, 4)) == BigRational(3, 2));
    CHECK(m7.add(m7.from_int(5), m7.from_int(4)) == 2);
    CHECK(m7.mul(m7.from_int(-1), m7.from_int(-1)) == 1);
    CHECK(zr.is_unit(zr.from_int(-1)));
    CHECK_FALSE(zr.is_unit(zr.from_int(2)));
    CHECK(qr.inv(BigRational(3, 5)) == BigRational(5, 3));
}

TEST_CASE("modular inverses over prime and prime-power moduli") {
    std::mt19937 rng(11);
    const ModularRing mp(997);
    std::uniform_int_distribution<long long> d(1, 996);
    for (int t = 0; t < 50; ++t) {
        const auto a = mp.from_int(d(rng));
        REQUIRE(mp.is_unit(a));
        CHECK(mp.mul(a, mp.inv(a)) == 1);
    }
    const ModularRing m4(4);
    CHECK(m4.inv(m4.from_int(3)) == 3);
    CHECK_FALSE(m4.is_unit(m4.from_int(2)));
}

TEST_CASE("series arithmetic: associativity, distributivity, truncation") {
    std::mt19937 rng(42);
    for (int t = 0; t < 10; ++t) {
        const auto f = random_series(rng, 30);
        const auto g = random_series(rng, 30);
        const auto h = random_series(rng, 30);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
        CHECK((f * g).truncated(20) == f.truncated(20) * g);
    }
}

TEST_CASE("binomial and sparse multiply/divide round-trip") {
    std::mt19937 rng(7);
    const IntegerRing zr;
    auto f = random_series(rng, 60);
    auto g = f;
    g.mul_binomial_inplace(3, zr.from_int(-1));
    CHECK_FALSE(g == f);
    g.div_binomial_inplace(3, zr.from_int(-1));
    CHECK(g == f);

    const auto pent = euler_product_sparse(zr, 2, 60);
    g.mul_sparse_inplace(pent);
    g.div_sparse_inplace(pent);
    CHECK(g == f);
}

TEST_CASE("series inverse against direct product") {
    std::mt19937 rng(3);
    const IntegerRing zr;
    auto f = random_series(rng, 40);
    f.set(0, BigInt(1)); // unit constant term
    const auto inv = f.inverse();
    CHECK(f * inv == Series<IntegerRing>::one(zr, 40));
}

TEST_CASE("mod-m reduction is a ring homomorphism on series pipelines") {
    const IntegerRing zr;
    const auto pz = pochhammer_q(zr, 1, 1, kInfiniteCount, 200).inverse(); // partition gf
    for (long long m : {2LL, 4LL}) {
        const ModularRing mr(m);
        const auto pm = pochhammer_q(mr, 1, 1, kInfiniteCount, 200).inverse();
        for (std::size_t i = 0; i < 200; ++i) {
            const BigInt red = ((pz[i] % m) + m) % m;
            CHECK(red == BigInt(pm[i]));
        }
    }
}

TEST_CASE("gaussian binomial symmetry, positivity, degree") {
    for (long long N = 0; N <= 20; ++N)
        for (long long n = 0; n <= N; ++n) {
            const auto a = gaussian_binomial(N, n);
            const auto b = gaussian_binomial(N, N - n);
            CHECK(a == b);
            CHECK(static_cast<long long>(a.size()) == n * (N - n) + 1);
            for (const auto& c : a) CHECK(c >= 0);
        }
}

TEST_CASE("partitions-in-box symmetry and edge conventions") {
    for (long long N = 0; N <= 10; ++N)
        for (long long M = 0; M <= 10; ++M)
            for (long long k = 0; k <= N * M; ++k)
                CHECK(partitions_in_box(N, M, k) == partitions_in_box(M, N, k));
    CHECK(partitions_in_box(5, 0, 0) == 1);
    CHECK(partitions_in_box(0, 5, 0) == 1);
    CHECK(partitions_in_box(-1, 2, 0) == 0);
    CHECK(partitions_in_box(3, 2, 7) == 0); // beyond the box
}

TEST_CASE("theta sums match their triple products to order 200") {
    const IntegerRing zr;
    const std::size_t N = 200;
    const auto e5 = pochhammer_q(zr, 5, 5, kInfiniteCount, N);
    CHECK(jacobi_sum(zr, 5, 1, N) ==
          pochhammer_q(zr, 2, 5, kInfiniteCount, N) *
              pochhammer_q(zr, 3, 5, kInfiniteCount, N) * e5);
    CHECK(jacobi_sum(zr, 5, -3, N) ==
          pochhammer_q(zr, 1, 5, kInfiniteCount, N) *
              pochhammer_q(zr, 4, 5, kInfiniteCount, N) * e5);
}

TEST_CASE("first Rogers-Ramanujan identity to order 200") {
    const IntegerRing zr;
    const std::size_t N = 200;
    const auto prod = (pochhammer_q(zr, 1, 5, kInfiniteCount, N) *
                       pochhammer_q(zr, 4, 5, kInfiniteCount, N))
                          .inverse();
    CHECK(rr_sum(zr, N, 0) == prod);
}

TEST_CASE("half-integer theta exponent is rejected") {
    const IntegerRing zr;
    CHECK_THROWS_AS(jacobi_sum(zr, 1, 0, 10), std::domain_error);
}

TEST_CASE("offset series refuses surviving negative exponents") {
    const IntegerRing zr;
    auto s = OffsetSeries<IntegerRing>::zero(zr, -2, 10);
    s.add_term(-2, zr.one());
    CHECK_THROWS_AS(s.to_series(10), std::logic_error);
    auto ok = OffsetSeries<IntegerRing>::zero(zr, -2, 10);
    ok.add_term(1, zr.from_int(5));
    const auto t = ok.to_series(10);
    CHECK(t[1] == BigInt(5));
}

TEST_CASE("mixing incompatible rings throws") {
    const ModularRing m2(2), m3(3);
    const auto a = Series<ModularRing>::one(m2, 5);
    const auto b = Series<ModularRing>::one(m3, 5);
    CHECK_THROWS_AS(a + b, std::logic_error);
}
