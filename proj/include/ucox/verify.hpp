#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucox/io.hpp"

namespace ucox::verify {

struct SuiteParams {
    int rank = 0;  // 0 = the suite's default ranks
    std::uint64_t seed = 1;
    int bound = 16;  // complexity bound for bounded searches
    std::optional<int> only_case;
};

struct Failure {
    int rank = 0;
    int case_index = 0;
    std::string check;
    json data;
};

struct SuiteResult {
    std::string suite;
    SuiteParams params;
    std::vector<int> ranks;
    int cases_run = 0;
    std::vector<Failure> failures;
    double wall_seconds = 0;
    bool ok() const { return failures.empty(); }
};

struct SuiteInfo {
    std::string name;
    std::string description;
    std::vector<int> default_ranks;
    int min_rank;
};

const std::vector<SuiteInfo>& suites();
const SuiteInfo& suite_info(const std::string& name);  // throws std::invalid_argument

SuiteResult run_suite(const std::string& name, const SuiteParams& params);

json result_to_json(const SuiteResult& r, bool with_timing = false);
// Self-contained payload that re-runs exactly the failing case.
json failure_payload(const SuiteResult& r, const Failure& f);
SuiteResult replay(const json& payload);

}  // namespace ucox::verify
