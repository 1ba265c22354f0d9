#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qseries/partitions.hpp"

using namespace qseries;

TEST_CASE("worked example: weight 11") {
    CHECK(count(11, ConstraintSpec::rascoe(0)) == 3);
    CHECK(count(11, ConstraintSpec::non_rascoe(0)) == 9);

    const auto rascoe11 = enumerate(11, ConstraintSpec::rascoe(0));
    REQUIRE(rascoe11.size() == 3);
    CHECK(rascoe11[0].parts == std::vector<int>{9, 2});
    CHECK(rascoe11[1].parts == std::vector<int>{7, 3, 1});
    CHECK(rascoe11[2].parts == std::vector<int>{6, 3, 2});

    CHECK(smallest_repeats_count(0, 0, 11) == 12);
    CHECK(smallest_repeats_count(1, 0, 11) == 5);
    CHECK(smallest_repeats_count(2, 0, 11) == 2);
    CHECK(12 - 5 + 2 == 9); // alternating sum reproduces b(11)
}

TEST_CASE("empty partition: b(0)=1, a(0)=0") {
    const auto none = enumerate(0, ConstraintSpec::rascoe(0));
    CHECK(none.empty());
    const auto one = enumerate(0, ConstraintSpec::non_rascoe(0));
    REQUIRE(one.size() == 1);
    CHECK(one[0].parts.empty());
    CHECK(count(0, ConstraintSpec::rascoe(2)) == 0);
    CHECK(count(0, ConstraintSpec::non_rascoe(2)) == 1);
}

TEST_CASE("rank histogram of gap->=2 partitions") {
    const auto r9 = rank_counts(9, 0);
    long long odd = 0, even = 0;
    for (const auto& [m, c] : r9) ((m % 2 != 0) ? odd : even) += c;
    CHECK(odd == 1);
    CHECK(even == 4);

    CHECK(rank_counts(5, 0) == std::map<int, long long>{{4, 1}, {2, 1}});
    CHECK(rank_counts(0, 0).empty());
}

TEST_CASE("alternating smallest-repeats sum equals non-Rascoe count") {
    for (int ell = 0; ell <= 2; ++ell)
        for (int n = 1; n <= 40; ++n) {
            long long alt = 0;
            for (int j = 0; j * (j + ell) <= n + j; ++j) {
                const long long c = smallest_repeats_count(j, ell, n);
                alt += (j % 2 == 0) ? c : -c;
            }
            CHECK(alt == count(n, ConstraintSpec::non_rascoe(ell)));
        }
}

TEST_CASE("rascoe and non-rascoe partition the distinct-part partitions") {
    for (int ell = 0; ell <= 3; ++ell)
        for (int n = 0; n <= 40; ++n)
            CHECK(count(n, ConstraintSpec::rascoe(ell)) +
                      count(n, ConstraintSpec::non_rascoe(ell)) ==
                  count(n, ConstraintSpec::distinct()));
}

TEST_CASE("unrestricted analogues partition p(n)") {
    for (int n = 1; n <= 40; ++n)
        CHECK(count(n, ConstraintSpec::count_is_part()) +
                  count(n, ConstraintSpec::count_not_part()) ==
              count(n, ConstraintSpec::all()));
}

TEST_CASE("largest-repeats refinement equals rank refinement shifted by one") {
    for (int ell = 0; ell <= 2; ++ell)
        for (int n = 1; n <= 40; ++n) {
            const auto L = largest_repeats_counts(n, ell);
            const auto R = rank_counts(n, ell);
            std::map<int, long long> shifted;
            for (const auto& [m, c] : R) shifted[m + 1] += c;
            CHECK(L == shifted);
        }
}

TEST_CASE("smallest-repeats at j=0 recovers plain distinct partitions") {
    for (int n = 0; n <= 40; ++n)
        CHECK(smallest_repeats_count(0, 0, n) == count(n, ConstraintSpec::distinct()));
}

TEST_CASE("beck statistic small values") {
    CHECK(beck_statistic(0) == 1); // {2} has rank 1 and one distinct part
    CHECK(beck_statistic(1) == 0); // no partition of 4 has rank 2
    CHECK(beck_statistic(2) == 2); // {5,1}: rank 3, two distinct parts
}

TEST_CASE("enumerated partitions satisfy their spec independently") {
    const std::vector<ConstraintSpec> specs = {
        ConstraintSpec::all(),           ConstraintSpec::distinct(),
        ConstraintSpec::rogers_ramanujan(1), ConstraintSpec::rascoe(1),
        ConstraintSpec::non_rascoe(2),   ConstraintSpec::smallest_repeats(2, 1),
        ConstraintSpec::largest_repeats(1),  ConstraintSpec::count_is_part(),
        ConstraintSpec::count_not_part()};
    for (const auto& spec : specs)
        for (int n = 0; n <= 25; ++n) {
            const auto list = enumerate(n, spec);
            for (const auto& p : list) {
                CHECK(p.weight() == n);
                CHECK(spec.matches(p));
            }
            // deterministic ordering: lexicographically decreasing
            for (std::size_t i = 1; i < list.size(); ++i)
                CHECK(list[i - 1].parts > list[i].parts);
        }
}

TEST_CASE("describe strings follow the CLI grammar") {
    CHECK(ConstraintSpec::all().describe() == "all");
    CHECK(ConstraintSpec::distinct().describe() == "distinct");
    CHECK(ConstraintSpec::rogers_ramanujan(0).describe() == "rr[l=0]");
    CHECK(ConstraintSpec::rascoe(2).describe() == "rascoe[l=2]");
    CHECK(ConstraintSpec::non_rascoe(1).describe() == "nonrascoe[l=1]");
    CHECK(ConstraintSpec::smallest_repeats(2, 1).describe() == "psmall[j=2,l=1]");
    CHECK(ConstraintSpec::largest_repeats(1).describe() == "lrep[l=1]");
    CHECK(ConstraintSpec::count_is_part().describe() == "count-is-part");
    CHECK(ConstraintSpec::count_not_part().describe() == "count-not-part");
}

TEST_CASE("weight guard") {
    CHECK_THROWS_AS(enumerate(121, ConstraintSpec::all()), GuardExceeded);
    CHECK_THROWS_AS(count(200, ConstraintSpec::distinct()), GuardExceeded);
    CHECK_NOTHROW(count(121, ConstraintSpec::distinct(), 130));
}
