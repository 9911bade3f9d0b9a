#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypoheat::cli {

/// Line-oriented `key = value` run configuration with `#` comments. Unknown
/// keys are rejected with their line number; defaults: steps 4096, paths
/// 10000, seed 0.
struct RunConfig {
    std::string command;            // simulate | cf | kernel | verify | limits | list-models
    std::string model;              // model tag with parameters, e.g. chopf(2)
    double t = 1.0;
    int steps = 4096;
    std::size_t paths = 10000;
    uint64_t seed = 0;
    std::vector<double> lambda_grid;
    std::vector<double> r_grid;
    std::vector<double> theta_grid;
    std::string suite;              // verify/limits suite name
    std::string out_dir = ".";
    int threads = 0;                // 0 = hardware/env default
    std::map<std::string, double> tolerance_overrides;

    std::string serialize() const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

} // namespace hypoheat::cli
