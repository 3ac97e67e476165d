#include "report.hpp"

#include <ostream>

namespace qzeta::cli {

namespace {

std::string csv_cell(const Json& v) {
    std::string s;
    if (v.is_null()) return s;
    if (v.is_string()) s = v.get<std::string>();
    else s = v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

}  // namespace

Json Report::to_json() const {
    Json j;
    j["command"] = command;
    j["params"] = params;
    j["results"] = results;
    j["residuals"] = residuals;
    j["terms"] = terms;
    j["ok"] = ok;
    if (!error.is_null()) j["error"] = error;
    j["wall_time_ms"] = wall_time_ms;
    j["schema_version"] = kSchemaVersion;
    return j;
}

void Report::write(std::ostream& os, const std::string& format) const {
    if (format != "csv") {
        os << to_json().dump(2) << "\n";
        return;
    }
    if (!error.is_null()) {
        os << "error_kind,message\n" << csv_cell(error["kind"]) << "," << csv_cell(error["message"]) << "\n";
        return;
    }
    const Json& rows = csv_source == "residuals" ? residuals : (csv_source == "terms" ? terms : results);
    for (std::size_t i = 0; i < csv_columns.size(); ++i) os << (i ? "," : "") << csv_columns[i];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < csv_columns.size(); ++i) {
            os << (i ? "," : "");
            if (row.contains(csv_columns[i])) os << csv_cell(row[csv_columns[i]]);
        }
        os << "\n";
    }
}

}  // namespace qzeta::cli
