#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "floquet/analysis.hpp"

namespace floquet {

/// Documented default for runs without --seed; never wall-clock entropy.
inline constexpr uint64_t kDefaultSeed = 0xF10C5EEDull;

struct ExperimentConfig {
    std::string code = "honeycomb";
    std::string layout = "falcon27";  // device name or patch spec "patch:RxC"
    int rounds = 0;                    // 0 -> code default (7 / 10)
    bool reset = true;
    bool uniform_noise = true;
    double p = 0.0;
    NoiseModel model{};
    int64_t shots = 10000;
    uint64_t seed = kDefaultSeed;
    int threads = 0;  // 0 -> FLOQUET_THREADS env, then hardware
    std::string out_path;
    bool json = false;
    std::string dump_shots;
};

Layout layout_from_spec(const std::string& spec);

/// Full pipeline: layout -> schedule -> detectors -> noisy circuit -> shots
/// -> report. Thread count never affects the result.
DetectionReport run_experiment(const ExperimentConfig& config);

/// CLI front end; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace floquet
