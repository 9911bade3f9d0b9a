#include "hypoheat/stats/report.hpp"

#include "json.hpp"

namespace hypoheat::stats {

namespace {
nlohmann::json to_json_obj(const TestReport& r) {
    return {{"name", r.name},
            {"statistic", r.statistic},
            {"threshold", r.threshold},
            {"higher_is_better", r.higher_is_better},
            {"pass", r.pass},
            {"sample_size", r.sample_size},
            {"seed", r.seed},
            {"model", r.model_tag},
            {"wall_ms", r.wall_ms}};
}
} // namespace

std::string TestReport::to_json() const { return to_json_obj(*this).dump(2); }

std::string reports_to_json(const std::string& suite, const std::vector<TestReport>& reports,
                            uint64_t seed, double wall_ms) {
    nlohmann::json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["wall_ms"] = wall_ms;
    j["versions"] = {{"hypoheat", "0.1.0"}};
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json_obj(r));
    j["all_pass"] = all_pass(reports);
    return j.dump(2);
}

bool all_pass(const std::vector<TestReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

} // namespace hypoheat::stats
