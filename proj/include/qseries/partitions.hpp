#pragma once

// Brute-force enumerators for the restricted partition classes used as
// ground-truth oracles against the closed-form generating functions.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qseries {

struct Partition {
    std::vector<int> parts; // weakly decreasing, all >= 1

    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }
    int count() const { return static_cast<int>(parts.size()); }
    int largest() const { return parts.empty() ? 0 : parts.front(); }
    int smallest() const { return parts.empty() ? 0 : parts.back(); }
    // Dyson rank: largest part minus number of parts (0 for the empty
    // partition by convention; callers compare formulas only at weight >= 1).
    int rank() const { return largest() - count(); }
    bool has_part(int v) const;
    int distinct_part_count() const;
    bool parts_distinct() const;
};

enum class PartitionClass {
    All,             // unconstrained
    Distinct,        // strictly decreasing parts
    RogersRamanujan, // gaps >= 2, all parts > ell
    Rascoe,          // distinct, (count + ell) is a part
    NonRascoe,       // distinct, (count + ell) is not a part
    SmallestRepeats, // smallest part j repeats exactly j+ell times, rest distinct > j
    LargestRepeats,  // largest part v repeats at least v+ell times
    CountIsPart,     // unrestricted, count is a part
    CountNotPart,    // unrestricted, count is not a part
};

struct ConstraintSpec {
    PartitionClass kind = PartitionClass::All;
    int ell = 0;      // the shift parameter where the class uses one
    int smallest = 0; // j for SmallestRepeats

    static ConstraintSpec all() { return {PartitionClass::All, 0, 0}; }
    static ConstraintSpec distinct() { return {PartitionClass::Distinct, 0, 0}; }
    static ConstraintSpec rogers_ramanujan(int ell = 0);
    static ConstraintSpec rascoe(int ell = 0);
    static ConstraintSpec non_rascoe(int ell = 0);
    static ConstraintSpec smallest_repeats(int j, int ell = 0);
    static ConstraintSpec largest_repeats(int ell = 0);
    static ConstraintSpec count_is_part() { return {PartitionClass::CountIsPart, 0, 0}; }
    static ConstraintSpec count_not_part() { return {PartitionClass::CountNotPart, 0, 0}; }

    // Independent re-check used by the property tests.
    bool matches(const Partition& p) const;
    std::string describe() const;
};

struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultWeightGuard = 120;

// Every partition of n satisfying spec, exactly once, in lexicographically
// decreasing order.
std::vector<Partition> enumerate(int n, const ConstraintSpec& spec,
                                 int guard = kDefaultWeightGuard);

long long count(int n, const ConstraintSpec& spec, int guard = kDefaultWeightGuard);

// R_ell(m, n): rank -> count over gap>=2, min-part > ell partitions of n.
std::map<int, long long> rank_counts(int n, int ell, int guard = kDefaultWeightGuard);

// P_ell(j, n)
long long smallest_repeats_count(int j, int ell, int n, int guard = kDefaultWeightGuard);

// L_ell(m, N): number-of-parts -> count over partitions whose largest part v
// repeats at least v + ell times.
std::map<int, long long> largest_repeats_counts(int n, int ell,
                                                int guard = kDefaultWeightGuard);

// Total number of distinct part-sizes over partitions of 2n+2 with rank n+1.
long long beck_statistic(int n, int guard = kDefaultWeightGuard);

} // namespace qseries
