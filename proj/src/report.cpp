#include "qseries/report.hpp"

#include <json.hpp>

namespace qseries {

std::string IdentityReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["id"] = id;
    j["params"] = params;
    j["mode"] = mode;
    j["status"] = pass ? "pass" : "fail";
    if (witness_index.has_value()) {
        j["witness"] = {{"index", *witness_index}, {"lhs", witness_lhs}, {"rhs", witness_rhs}};
    }
    if (!detail.empty()) j["detail"] = detail;
    j["ms"] = ms;
    return j.dump();
}

std::string IdentityReport::csv_header() { return "id,params,status,mode,detail,ms"; }

std::string IdentityReport::to_csv_row() const {
    auto esc = [](const std::string& s) {
        std::string r = "\"";
        for (char c : s) {
            if (c == '"') r += '"';
            r += c;
        }
        return r + "\"";
    };
    std::string p;
    for (const auto& [k, v] : params) {
        if (!p.empty()) p += ";";
        p += k + "=" + v;
    }
    return esc(id) + "," + esc(p) + "," + (pass ? "pass" : "fail") + "," + esc(mode) + "," +
           esc(detail) + "," + std::to_string(ms);
}

} // namespace qseries
