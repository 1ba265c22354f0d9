#pragma once

// The series-identity catalog: every two-sided series identity the toolkit
// knows, each entry producing both sides as decimal coefficient strings
// (plus a common exponent shift for identities with Laurent sides) so the
// comparison, witness reporting and perturbation self-test are uniform
// across rings.

#include "qseries/report.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace qseries {

struct SidePair {
    long long shift = 0; // coefficient i sits at exponent i - shift
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
};

struct SeriesIdentity {
    std::string id;
    std::map<std::string, std::string> params;
    std::size_t default_order;
    std::function<SidePair(std::size_t order)> sides;
};

const std::vector<SeriesIdentity>& identity_catalog();

const SeriesIdentity& catalog_entry(const std::string& id);

IdentityReport check_series_identity(const SeriesIdentity& entry, std::size_t order);

// Self-test: re-run the check with one rhs coefficient perturbed; a correct
// harness must fail with that exact witness exponent.
IdentityReport check_perturbed(const SeriesIdentity& entry, std::size_t order,
                               std::size_t perturb_at);

} // namespace qseries
