#pragma once

#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include "floquet/codes.hpp"
#include "floquet/noise.hpp"
#include "floquet/simulator.hpp"

namespace floquet {

struct RunMeta {
    std::string code = "honeycomb";  // "honeycomb" | "color"
    std::string layout;
    int rounds = 0;
    bool reset = true;
    bool uniform_noise = true;
    double p = 0.0;       // meaningful when uniform_noise
    NoiseModel model{};
    int64_t shots = 0;
    uint64_t seed = 0;
};

struct DetectorRate {
    int detector = -1;
    int plaquette = -1;
    Color color = Color::Red;
    Basis basis = Basis::Native;
    int64_t fires = 0;
    double rate = 0.0;
    double stderr_ = 0.0;  // binomial
};

struct PlaquetteRate {
    int plaquette = -1;
    Color color = Color::Red;
    Basis basis = Basis::Native;
    double rate = 0.0;
    double stderr_ = 0.0;
};

/// Syndrome-change detection rates: per detector, grouped per (plaquette,
/// basis), and the mean/min/max over the plaquette-level rates (the
/// aggregation plotted in the detection-rate figures).
struct DetectionReport {
    RunMeta meta;
    std::vector<DetectorRate> detectors;
    std::vector<PlaquetteRate> plaquettes;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
};

DetectionReport detection_rates(const ShotTable& shots,
                                const std::vector<Detector>& detectors,
                                RunMeta meta = {});

std::tuple<double, double, double> aggregate_bars(
    const DetectionReport& report);

/// One report per p value; every row carries the metadata needed to
/// regenerate it.
std::vector<DetectionReport> sweep(const std::string& code,
                                   const Layout& layout,
                                   const std::vector<double>& p_values,
                                   int64_t shots, uint64_t base_seed,
                                   bool reset_aux, int rounds = 0,
                                   int threads = 0);

/// Rounds default for a code name: 7 for honeycomb, 10 for color.
int default_rounds(const std::string& code);

void write_report_csv(std::ostream& out, const DetectionReport& report);
void write_sweep_csv(std::ostream& out,
                     const std::vector<DetectionReport>& reports);
std::string report_to_json(const DetectionReport& report);
std::string sweep_to_json(const std::vector<DetectionReport>& reports);

}  // namespace floquet
