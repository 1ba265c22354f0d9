#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qseries/catalog.hpp"
#include "qseries/genfun.hpp"
#include "qseries/scans.hpp"

#include <json.hpp>

using namespace qseries;

TEST_CASE("every catalog entry verifies at a reduced order") {
    for (const auto& entry : identity_catalog()) {
        const std::size_t order = std::min<std::size_t>(entry.default_order, 60);
        const auto rep = check_series_identity(entry, order);
        INFO(entry.id, " : lhs=", rep.witness_lhs, " rhs=", rep.witness_rhs,
             " at ", rep.witness_index ? *rep.witness_index : -1);
        CHECK(rep.pass);
        CHECK(rep.mode == "series-to-order-N");
    }
}

TEST_CASE("every catalog entry verifies at its default order") {
    for (const auto& entry : identity_catalog()) {
        const auto rep = check_series_identity(entry, 0);
        INFO(entry.id, " : lhs=", rep.witness_lhs, " rhs=", rep.witness_rhs,
             " at ", rep.witness_index ? *rep.witness_index : -1);
        CHECK(rep.pass);
    }
}

TEST_CASE("perturbation self-test: a planted error is caught with its witness") {
    for (const auto& entry : identity_catalog()) {
        const std::size_t order = std::min<std::size_t>(entry.default_order, 40);
        const std::size_t at = order / 2;
        const auto rep = check_perturbed(entry, order, at);
        INFO(entry.id);
        CHECK_FALSE(rep.pass);
        REQUIRE(rep.witness_index.has_value());
        const auto sp = entry.sides(order);
        CHECK(*rep.witness_index == static_cast<long long>(at) - sp.shift);
        CHECK(rep.witness_lhs != rep.witness_rhs);
    }
}

TEST_CASE("catalog lookup") {
    CHECK(catalog_entry("rr1").id == "rr1");
    CHECK_THROWS_AS(catalog_entry("no-such-entry"), std::invalid_argument);
}

TEST_CASE("reports serialize to parseable JSON and CSV") {
    const auto rep = check_series_identity(catalog_entry("hecke[i]"), 30);
    const auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j.at("schema_version").get<int>() == kReportSchemaVersion);
    CHECK(j.at("id").get<std::string>() == "hecke[i]");
    CHECK(j.at("status").get<std::string>() == "pass");
    CHECK(j.at("mode").get<std::string>() == "series-to-order-N");
    CHECK(j.contains("params"));

    CHECK(IdentityReport::csv_header() == "id,params,status,mode,detail,ms");
    const auto row = rep.to_csv_row();
    CHECK(row.rfind("\"hecke[i]\",", 0) == 0);
    CHECK(row.find(",pass,") != std::string::npos);
}

TEST_CASE("parity supports to 2000") {
    for (long long ell : {0LL, 1LL, 2LL}) {
        const auto rep = parity_report(ell, 2000);
        INFO("ell=", ell, " : ", rep.detail);
        CHECK(rep.pass);
    }
}

TEST_CASE("mod-2 triple-sum congruence") {
    for (long long ell = 0; ell <= 6; ++ell) {
        const auto rep = lcong_report(ell, 80);
        INFO("ell=", ell);
        CHECK(rep.pass);
    }
}

TEST_CASE("convolution congruence holds from n=0, fails from n=1") {
    const auto good = convolution_report(100, true);
    CHECK(good.pass);
    const auto bad = convolution_report(100, false);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witness_index.has_value());
    CHECK(*bad.witness_index == 1);
}

TEST_CASE("Hauptmodul route of the convolution congruence") {
    CHECK(j5_report(20).pass);
}

TEST_CASE("Beck-type statistic matches its closed form") {
    CHECK(beck_report(12).pass);
}

TEST_CASE("congruence scan at a reduced range") {
    const auto res = scan_conjecture1(20000);
    CHECK(res.violations.empty());
    CHECK(res.exceptional == std::vector<long long>{1, 7, 8, 13, 19, 22});
}

TEST_CASE("parity agrees between integer and mod-2 arithmetic") {
    const IntegerRing zr;
    const ModularRing m2(2);
    for (long long ell : {0LL, 1LL, 2LL}) {
        const auto bi = nonrascoe_gf(zr, 500, ell);
        const auto bm = nonrascoe_gf(m2, 500, ell);
        for (std::size_t i = 0; i < 500; ++i)
            CHECK(BigInt(((bi[i] % 2) + 2) % 2) == BigInt(bm[i]));
    }
}
