#include "macq/report.hpp"

#include <algorithm>

namespace macq {

void Report::record(const std::string& name, bool pass, const std::string& detail) {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    if (it == checks.end()) {
        checks.push_back({name, pass, pass ? "" : detail});
        return;
    }
    if (it->pass && !pass) {
        it->pass = false;
        it->detail = detail;
    }
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks) record(prefix + c.name, c.pass, c.detail);
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    for (const auto& [key, value] : params.items()) j[key] = value;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        arr.push_back(e);
    }
    j["checks"] = arr;
    j["pass"] = all_pass();
    return j;
}

}  // namespace macq
