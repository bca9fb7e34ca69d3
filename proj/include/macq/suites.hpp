#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "macq/combinat.hpp"
#include "macq/report.hpp"

namespace macq {

/// Shared knobs of every verification suite; each suite reads the ones it needs.
struct SuiteOptions {
    int n = 2;
    int l = 2;
    int k = 2;
    int maxdeg = 4;
    int samples = 10;
    std::uint64_t seed = 0;
};

struct SuiteInfo {
    std::string name;
    std::string description;
};

/// Catalog of named suites in a fixed order.
const std::vector<SuiteInfo>& suite_catalog();
/// Runs one suite; throws std::invalid_argument for an unknown name or out-of-range options.
Report run_suite(const std::string& name, const SuiteOptions& opt);

/// Dominant signatures of length n with non-negative entries and size at most maxdeg.
std::vector<Signature> signatures_up_to(int n, int maxdeg);

}  // namespace macq
