#include "qseries/partitions.hpp"

#include <algorithm>
#include <functional>

namespace qseries {

bool Partition::has_part(int v) const {
    return std::find(parts.begin(), parts.end(), v) != parts.end();
}

int Partition::distinct_part_count() const {
    int d = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (i == 0 || parts[i] != parts[i - 1]) ++d;
    return d;
}

bool Partition::parts_distinct() const {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] == parts[i - 1]) return false;
    return true;
}

ConstraintSpec ConstraintSpec::rogers_ramanujan(int ell) {
    if (ell < 0) throw std::invalid_argument("rogers_ramanujan: ell must be >= 0");
    return {PartitionClass::RogersRamanujan, ell, 0};
}
ConstraintSpec ConstraintSpec::rascoe(int ell) {
    if (ell < 0) throw std::invalid_argument("rascoe: ell must be >= 0");
    return {PartitionClass::Rascoe, ell, 0};
}
ConstraintSpec ConstraintSpec::non_rascoe(int ell) {
    if (ell < 0) throw std::invalid_argument("non_rascoe: ell must be >= 0");
    return {PartitionClass::NonRascoe, ell, 0};
}
ConstraintSpec ConstraintSpec::smallest_repeats(int j, int ell) {
    if (j < 0 || ell < 0) throw std::invalid_argument("smallest_repeats: j, ell must be >= 0");
    return {PartitionClass::SmallestRepeats, ell, j};
}
ConstraintSpec ConstraintSpec::largest_repeats(int ell) {
    if (ell < 0) throw std::invalid_argument("largest_repeats: ell must be >= 0");
    return {PartitionClass::LargestRepeats, ell, 0};
}

bool ConstraintSpec::matches(const Partition& p) const {
    switch (kind) {
    case PartitionClass::All:
        return true;
    case PartitionClass::Distinct:
        return p.parts_distinct();
    case PartitionClass::RogersRamanujan: {
        if (!p.parts.empty() && p.parts.back() <= ell) return false;
        for (std::size_t i = 1; i < p.parts.size(); ++i)
            if (p.parts[i - 1] - p.parts[i] < 2) return false;
        return true;
    }
    case PartitionClass::Rascoe:
        return p.parts_distinct() && p.has_part(p.count() + ell);
    case PartitionClass::NonRascoe:
        return p.parts_distinct() && !p.has_part(p.count() + ell);
    case PartitionClass::SmallestRepeats: {
        const int j = smallest;
        if (j == 0) return p.parts_distinct();
        if (p.parts.empty() || p.smallest() != j) return false;
        const long long freq = std::count(p.parts.begin(), p.parts.end(), j);
        if (freq != static_cast<long long>(j) + ell) return false;
        // every part above the repeated block must occur once
        const std::size_t top = p.parts.size() - static_cast<std::size_t>(freq);
        for (std::size_t i = 1; i < top; ++i)
            if (p.parts[i] == p.parts[i - 1]) return false;
        return true;
    }
    case PartitionClass::LargestRepeats: {
        const int v = p.largest();
        const long long reps = std::count(p.parts.begin(), p.parts.end(), v);
        return reps >= static_cast<long long>(v) + ell;
    }
    case PartitionClass::CountIsPart:
        return p.has_part(p.count());
    case PartitionClass::CountNotPart:
        return !p.has_part(p.count());
    }
    return false;
}

std::string ConstraintSpec::describe() const {
    switch (kind) {
    case PartitionClass::All: return "all";
    case PartitionClass::Distinct: return "distinct";
    case PartitionClass::RogersRamanujan: return "rr[l=" + std::to_string(ell) + "]";
    case PartitionClass::Rascoe: return "rascoe[l=" + std::to_string(ell) + "]";
    case PartitionClass::NonRascoe: return "nonrascoe[l=" + std::to_string(ell) + "]";
    case PartitionClass::SmallestRepeats:
        return "psmall[j=" + std::to_string(smallest) + ",l=" + std::to_string(ell) + "]";
    case PartitionClass::LargestRepeats: return "lrep[l=" + std::to_string(ell) + "]";
    case PartitionClass::CountIsPart: return "count-is-part";
    case PartitionClass::CountNotPart: return "count-not-part";
    }
    return "?";
}

namespace {

// Recursive descent, largest part first, so the output comes out in
// lexicographically decreasing order. gap = 0 (any), 1 (distinct),
// 2 (Rogers-Ramanujan); floor_part is the minimum allowed part.
void descend(int remaining, int cap, int gap, int floor_part, std::vector<int>& cur,
             const std::function<void(const std::vector<int>&)>& sink) {
    if (remaining == 0) {
        sink(cur);
        return;
    }
    for (int p = std::min(cap, remaining); p >= floor_part; --p) {
        // prune: with gap g and floor f, the most we can still place below p
        // is p + (p-g) + (p-2g) + ... >= remaining must stay reachable
        cur.push_back(p);
        descend(remaining - p, p - gap, gap, floor_part, cur, sink);
        cur.pop_back();
    }
}

std::vector<Partition> enumerate_base(int n, int gap, int floor_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    descend(n, n, gap, floor_part, cur,
            [&](const std::vector<int>& parts) { out.push_back(Partition{parts}); });
    return out;
}

} // namespace

std::vector<Partition> enumerate(int n, const ConstraintSpec& spec, int guard) {
    if (n < 0) throw std::invalid_argument("enumerate: weight must be >= 0");
    if (n > guard)
        throw GuardExceeded("weight " + std::to_string(n) + " exceeds enumeration guard " +
                            std::to_string(guard) + "; use the series route instead");
    switch (spec.kind) {
    case PartitionClass::All:
        return enumerate_base(n, 0, 1);
    case PartitionClass::Distinct:
        return enumerate_base(n, 1, 1);
    case PartitionClass::RogersRamanujan:
        return enumerate_base(n, 2, spec.ell + 1);
    case PartitionClass::Rascoe:
    case PartitionClass::NonRascoe: {
        std::vector<Partition> out;
        for (auto& p : enumerate_base(n, 1, 1))
            if (spec.matches(p)) out.push_back(std::move(p));
        return out;
    }
    case PartitionClass::SmallestRepeats: {
        const int j = spec.smallest;
        if (j == 0) return enumerate_base(n, 1, 1);
        const long long block = static_cast<long long>(j) * (j + spec.ell);
        if (block > n) return {};
        std::vector<Partition> out;
        for (auto& p : enumerate_base(n - static_cast<int>(block), 1, j + 1)) {
            p.parts.insert(p.parts.end(), static_cast<std::size_t>(j + spec.ell), j);
            out.push_back(std::move(p));
        }
        return out;
    }
    case PartitionClass::LargestRepeats:
    case PartitionClass::CountIsPart:
    case PartitionClass::CountNotPart: {
        std::vector<Partition> out;
        for (auto& p : enumerate_base(n, 0, 1))
            if (spec.matches(p)) out.push_back(std::move(p));
        return out;
    }
    }
    return {};
}

long long count(int n, const ConstraintSpec& spec, int guard) {
    return static_cast<long long>(enumerate(n, spec, guard).size());
}

std::map<int, long long> rank_counts(int n, int ell, int guard) {
    std::map<int, long long> out;
    if (n == 0) return out; // empty partition reported separately, see docs
    for (const auto& p : enumerate(n, ConstraintSpec::rogers_ramanujan(ell), guard))
        ++out[p.rank()];
    return out;
}

long long smallest_repeats_count(int j, int ell, int n, int guard) {
    return count(n, ConstraintSpec::smallest_repeats(j, ell), guard);
}

std::map<int, long long> largest_repeats_counts(int n, int ell, int guard) {
    std::map<int, long long> out;
    for (const auto& p : enumerate(n, ConstraintSpec::largest_repeats(ell), guard))
        ++out[p.count()];
    return out;
}

long long beck_statistic(int n, int guard) {
    const int weight = 2 * n + 2;
    if (weight > guard)
        throw GuardExceeded("beck statistic: 2n+2 exceeds enumeration guard");
    long long total = 0;
    for (const auto& p : enumerate(weight, ConstraintSpec::all(), guard))
        if (p.rank() == n + 1) total += p.distinct_part_count();
    return total;
}

} // namespace qseries
