#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypoheat::stats {

/// Outcome of one statistical or identity check. pass <=> the statistic meets
/// its threshold in the stated direction.
struct TestReport {
    std::string name;
    double statistic = 0.0;
    double threshold = 0.0;
    bool higher_is_better = false; // e.g. p-values
    bool pass = false;
    std::size_t sample_size = 0;
    uint64_t seed = 0;
    std::string model_tag;
    double wall_ms = 0.0;

    std::string to_json() const;
};

std::string reports_to_json(const std::string& suite, const std::vector<TestReport>& reports,
                            uint64_t seed, double wall_ms);

bool all_pass(const std::vector<TestReport>& reports);

} // namespace hypoheat::stats
