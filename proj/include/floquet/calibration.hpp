#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floquet/noise.hpp"

namespace floquet {

/// Device benchmarking snapshot. Probabilities are dimensionless, durations
/// share one time unit. quantum_volume is carried as metadata only.
struct DeviceCalibration {
    struct Qubit {
        int id = -1;
        double prep_error = 0.0;  // prob_meas1_prep0
        double meas_error = 0.0;
        double id_error = 0.0;     // p_id over the reference timescale
        double id_duration = 0.0;  // t_id
    };
    struct Coupling {
        int a = -1, b = -1;
        double cx_error = 0.0;
        double cx_duration = 0.0;
    };

    std::string device;
    std::vector<Qubit> qubits;
    std::vector<Coupling> couplings;
    double meas_duration = 0.0;
    std::optional<int> quantum_volume;
};

DeviceCalibration parse_calibration(const std::string& json_text);
DeviceCalibration load_calibration(const std::string& path);
std::string calibration_to_json(const DeviceCalibration& cal);

/// Mean and population standard deviation of the assembled error multiset:
/// per-qubit prep and measurement errors, per-coupling CX errors, and one
/// idle error per qubit extrapolated to the measurement duration plus the
/// longest CX duration.
std::pair<double, double> mean_error(const DeviceCalibration& cal);

/// Category means as a simulation noise model.
NoiseModel calibration_noise_model(const DeviceCalibration& cal);

}  // namespace floquet
