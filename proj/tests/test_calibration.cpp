#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "floquet/calibration.hpp"

using namespace floquet;

namespace {

DeviceCalibration uniform_cal(int qubits, double q) {
    DeviceCalibration cal;
    cal.device = "uniform";
    cal.meas_duration = 1.0;
    for (int i = 0; i < qubits; ++i) cal.qubits.push_back({i, q, q, q, 1.0});
    return cal;
}

}  // namespace

TEST_CASE("minimal fixture loads") {
    const auto cal = parse_calibration(R"({
        "device": "tiny", "meas_duration": 4.0,
        "qubits": [{"id": 0, "prep_error": 0.01, "meas_error": 0.02,
                    "id_error": 0.001, "id_duration": 0.5}],
        "couplings": []
    })");
    CHECK(cal.device == "tiny");
    CHECK(cal.qubits.size() == 1);
    CHECK(cal.couplings.empty());
    CHECK(!cal.quantum_volume.has_value());
    const auto [mean, sigma] = mean_error(cal);
    CHECK(mean > 0.0);
    CHECK(sigma >= 0.0);
}

TEST_CASE("errors: range, parse, missing fields") {
    CHECK_THROWS(parse_calibration(R"({
        "device": "bad", "meas_duration": 4.0,
        "qubits": [{"id": 0, "prep_error": 0.01, "meas_error": 0.02,
                    "id_error": 0.001, "id_duration": 0.5}],
        "couplings": [{"qubits": [0, 1], "cx_error": 1.5, "cx_duration": 1.0}]
    })"));
    CHECK_THROWS(parse_calibration("not json"));
    CHECK_THROWS(parse_calibration(R"({"device": "x"})"));
    CHECK_THROWS(parse_calibration(R"({
        "device": "x", "meas_duration": 1.0,
        "qubits": [{"id": 0, "prep_error": 0.01}], "couplings": []
    })"));
}

TEST_CASE("round trip") {
    const auto cal = load_calibration(std::string(FIXTURE_DIR) +
                                      "/synthetic2q.json");
    const auto back = parse_calibration(calibration_to_json(cal));
    CHECK(back.device == cal.device);
    CHECK(back.qubits.size() == cal.qubits.size());
    CHECK(back.couplings.size() == cal.couplings.size());
    CHECK(back.meas_duration == cal.meas_duration);
    CHECK(back.quantum_volume == cal.quantum_volume);
    CHECK(calibration_to_json(back) == calibration_to_json(cal));
}

TEST_CASE("synthetic two-qubit fixture reproduces hand arithmetic") {
    const auto cal = load_calibration(std::string(FIXTURE_DIR) +
                                      "/synthetic2q.json");
    // Idle timescale: measurement plus the longest CX, t = 10 + 5.
    const double t = 15.0;
    const double idle = 0.75 * (1.0 - std::pow(1.0 - 4.0 * 0.001 / 3.0, t));
    const double probs[7] = {0.01, 0.02, 0.01, 0.03, 0.02, idle, idle};
    double mean = 0.0;
    for (double p : probs) mean += p;
    mean /= 7.0;
    double var = 0.0;
    for (double p : probs) var += (p - mean) * (p - mean);
    const double sigma = std::sqrt(var / 7.0);

    const auto [got_mean, got_sigma] = mean_error(cal);
    CHECK(std::fabs(got_mean - mean) < 1e-12);
    CHECK(std::fabs(got_sigma - sigma) < 1e-12);

    const NoiseModel model = calibration_noise_model(cal);
    CHECK(model.p_prep == doctest::Approx(0.015).epsilon(1e-12));
    CHECK(model.p_meas == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(model.p_cx == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(model.p_idle == doctest::Approx(idle).epsilon(1e-12));
}

TEST_CASE("uniform calibrations have zero spread") {
    // With t = t_id = meas_duration and no couplings, the idle entry equals
    // the raw q, so every assembled probability is q.
    const auto cal = uniform_cal(5, 0.02);
    const auto [mean, sigma] = mean_error(cal);
    CHECK(mean == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(sigma == doctest::Approx(0.0).epsilon(1e-12));

    const NoiseModel model = calibration_noise_model(cal);
    CHECK(model.p_prep == doctest::Approx(0.02));
    CHECK(model.p_idle == doctest::Approx(0.02));
    CHECK(model.p_cx == 0.0);
}

TEST_CASE("mean is permutation invariant") {
    auto cal = load_calibration(std::string(FIXTURE_DIR) +
                                "/synthetic2q.json");
    const auto [m1, s1] = mean_error(cal);
    std::reverse(cal.qubits.begin(), cal.qubits.end());
    const auto [m2, s2] = mean_error(cal);
    CHECK(m1 == doctest::Approx(m2).epsilon(1e-15));
    CHECK(s1 == doctest::Approx(s2).epsilon(1e-15));
}

TEST_CASE("scaling pre-extrapolated probabilities scales mean and sigma") {
    DeviceCalibration cal;
    cal.device = "scaled";
    cal.meas_duration = 1.0;
    // id_duration == t so extrapolation is the identity on id_error.
    cal.qubits = {{0, 0.01, 0.02, 0.005, 1.0}, {1, 0.03, 0.01, 0.004, 1.0}};
    const auto [m1, s1] = mean_error(cal);
    for (auto& q : cal.qubits) {
        q.prep_error *= 0.5;
        q.meas_error *= 0.5;
        q.id_error *= 0.5;
    }
    const auto [m2, s2] = mean_error(cal);
    CHECK(m2 == doctest::Approx(0.5 * m1).epsilon(1e-12));
    CHECK(s2 == doctest::Approx(0.5 * s1).epsilon(1e-12));
}

TEST_CASE("zero calibration gives the zero model") {
    const auto cal = uniform_cal(3, 0.0);
    const auto [mean, sigma] = mean_error(cal);
    CHECK(mean == 0.0);
    CHECK(sigma == 0.0);
    CHECK(calibration_noise_model(cal).is_zero());
}

TEST_CASE("empty calibration is rejected") {
    DeviceCalibration cal;
    cal.device = "empty";
    cal.meas_duration = 1.0;
    CHECK_THROWS_AS(mean_error(cal), std::invalid_argument);
    CHECK_THROWS_AS(calibration_noise_model(cal), std::invalid_argument);
}
