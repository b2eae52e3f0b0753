#pragma once

#include "cmlab/scenario.hpp"

#include "json.hpp"

#include <cstdint>
#include <utility>

namespace cmlab::cli {

struct CheckOutcome {
    CheckSpec spec;
    std::string status;  // pass | violation | mismatch | error
    std::string outcome; // canonical one-word token, compared against expect
    std::string citation;
    nlohmann::ordered_json data;
    std::uint64_t budget_steps = 0;
    double elapsed_ms = 0; // text output only, never serialized to JSON
};

struct RunResult {
    Scenario scenario;
    std::vector<CheckOutcome> checks;
    std::string status; // worst check status
    int exit_code = 0;  // 2 on any error, 1 on any mismatch or violation
};

struct RunOptions {
    std::uint64_t budget = 0; // nonzero overrides the scenario budget
    int jobs = 1;
    int wpr_bound = 8; // default search depth for bounded wpr verification
};

RunResult run_scenario(const Scenario& sc, const RunOptions& opts);

// stable field order, no timing data, trailing newline
std::string emit_json(const RunResult& r);
std::string emit_text(const RunResult& r);

const std::vector<std::pair<std::string, std::string>>& bundled_scenarios();
const std::string* find_bundled(const std::string& name);

} // namespace cmlab::cli
