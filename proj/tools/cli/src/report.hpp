#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace qzeta::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct Report {
    std::string command;
    Json params = Json::object();
    Json results = Json::array();
    Json residuals = Json::array();
    Json terms = Json::array();
    Json error;                // null unless the command failed
    bool ok = true;
    double wall_time_ms = 0;

    /// Which array the CSV rendering flattens, and its fixed header.
    std::string csv_source = "results";
    std::vector<std::string> csv_columns;

    Json to_json() const;
    void write(std::ostream& os, const std::string& format) const;
};

}  // namespace qzeta::cli
