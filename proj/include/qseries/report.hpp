#pragma once

// Verification reports shared by the harness and the CLI. Serialized as
// JSON lines (schema_version 1) and as CSV rows.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace qseries {

inline constexpr int kReportSchemaVersion = 1;

struct IdentityReport {
    std::string id;
    std::map<std::string, std::string> params;
    // "series-to-order-N" | "rational-point-evaluation" | "modular-scan"
    std::string mode;
    bool pass = false;
    // series mode: q-exponent of the first mismatch; point mode: point index
    std::optional<long long> witness_index;
    std::string witness_lhs;
    std::string witness_rhs;
    std::string detail;   // order checked, points used, support sets, ...
    std::int64_t ms = 0;  // wall time; zeroed in reproducible file output

    std::string to_json() const;
    std::string to_csv_row() const;
    static std::string csv_header();
};

} // namespace qseries
