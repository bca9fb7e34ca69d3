#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace macq {

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

/// Pass/fail summary of a verification run; parameters are emitted as top-level JSON fields.
struct Report {
    std::string suite;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<Check> checks;

    /// Records a check; repeated names are combined by logical and (first failing detail kept).
    void record(const std::string& name, bool pass, const std::string& detail = "");
    /// Appends all checks of another report, prefixing their names.
    void merge(const Report& other, const std::string& prefix = "");
    bool all_pass() const;
    nlohmann::ordered_json to_json() const;
};

}  // namespace macq
