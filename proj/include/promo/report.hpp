#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace promo {

enum class CheckStatus { pass, fail, skip };

/// Everything needed to replay a failure: the poset document, the labeling
/// involved (may be empty for aggregate properties), and a short note.
struct CheckWitness {
    nlohmann::json poset;
    std::vector<int> labeling;
    std::string note;
};

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string details;
    std::optional<CheckWitness> witness;
};

struct ExperimentReport {
    std::string title;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;

    int failures() const;
    int skips() const;
    bool all_passed() const { return failures() == 0; }

    std::string to_text() const;
    /// Timing is the only nondeterministic field; exclude it to compare runs.
    nlohmann::json to_json(bool include_timing = true) const;
};

const char* to_string(CheckStatus s);

}  // namespace promo
