#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cmlab::cli {

// One check line.  String fields hold normalized source text; the runner
// resolves them against the scenario ring (or the per-check override).
struct CheckSpec {
    std::string kind;
    std::string elements;  // inside the parens, normalized
    std::string ring_expr; // per-check "in <ring>" override
    std::string pool;      // inside "pool { ... }"
    std::string from;      // inside "from { ... }"
    int bound = -1;        // wpr search bound
    int n = -1;            // example37 n_max, badchain depth
    int maxlen = -1;       // pool enumeration cap
    int samples = -1;      // randomized law samples
    int degree = -1;       // unmixedness candidate degree bound
    std::string expect;    // canonical outcome token to compare against

    std::string str() const;
};

struct Scenario {
    std::string name;
    std::string ring_expr;
    std::uint64_t budget = 0; // 0 = use the runner default
    std::vector<CheckSpec> checks;

    std::string str() const;
};

// Accepts scenario files (line oriented: scenario/ring/budget/check lines,
// '#' comments) and inline expressions ("<ring>; <check>; ..." where the
// leading "check" keyword is optional).  Errors carry line and column.
Scenario parse_scenario(const std::string& text);

Scenario parse_inline(const std::string& text);

const std::vector<std::string>& known_check_kinds();

} // namespace cmlab::cli
