#include "cmlab/runner.hpp"

namespace cmlab::cli {

const std::vector<std::pair<std::string, std::string>>& bundled_scenarios() {
    static const std::vector<std::pair<std::string, std::string>> table = {
#include "bundled_scenarios.inc"
    };
    return table;
}

const std::string* find_bundled(const std::string& name) {
    for (const auto& [n, text] : bundled_scenarios())
        if (n == name) return &text;
    return nullptr;
}

} // namespace cmlab::cli
