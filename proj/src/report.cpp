#include "promo/report.hpp"

#include <sstream>

namespace promo {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skip: return "skip";
    }
    return "?";
}

int ExperimentReport::failures() const {
    int out = 0;
    for (const auto& c : checks) out += c.status == CheckStatus::fail ? 1 : 0;
    return out;
}

int ExperimentReport::skips() const {
    int out = 0;
    for (const auto& c : checks) out += c.status == CheckStatus::skip ? 1 : 0;
    return out;
}

std::string ExperimentReport::to_text() const {
    std::ostringstream os;
    os << "== " << title << " ==\n";
    for (const auto& [key, value] : params) os << "   " << key << " = " << value << "\n";
    for (const auto& c : checks) {
        os << "[" << to_string(c.status) << "] " << c.name;
        if (!c.details.empty()) os << ": " << c.details;
        os << "\n";
        if (c.witness) {
            os << "      witness poset: " << c.witness->poset.dump() << "\n";
            if (!c.witness->labeling.empty()) {
                os << "      witness labeling: [";
                for (std::size_t i = 0; i < c.witness->labeling.size(); ++i)
                    os << (i ? "," : "") << c.witness->labeling[i];
                os << "]\n";
            }
            if (!c.witness->note.empty()) os << "      note: " << c.witness->note << "\n";
        }
    }
    os << failures() << " failure(s), " << skips() << " skipped, " << checks.size()
       << " check(s) in " << elapsed_ms << " ms\n";
    return os.str();
}

nlohmann::json ExperimentReport::to_json(bool include_timing) const {
    nlohmann::json jchecks = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc{{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}};
        if (c.witness) {
            jc["witness"] = {{"poset", c.witness->poset},
                             {"labeling", c.witness->labeling},
                             {"note", c.witness->note}};
        }
        jchecks.push_back(std::move(jc));
    }
    nlohmann::json jparams = nlohmann::json::object();
    for (const auto& [key, value] : params) jparams[key] = value;
    nlohmann::json out{{"title", title},
                       {"params", jparams},
                       {"checks", jchecks},
                       {"failures", failures()},
                       {"skipped", skips()}};
    if (include_timing) out["elapsed_ms"] = elapsed_ms;
    return out;
}

}  // namespace promo
