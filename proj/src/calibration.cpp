#include "floquet/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace floquet {

namespace {

double checked_prob(double v, const std::string& what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument(what + " outside [0, 1]: " +
                                    std::to_string(v));
    return v;
}

double checked_duration(double v, const std::string& what) {
    if (!(v > 0.0))
        throw std::invalid_argument(what + " must be positive: " +
                                    std::to_string(v));
    return v;
}

double idle_timescale(const DeviceCalibration& cal) {
    double max_cx = 0.0;
    for (const auto& c : cal.couplings)
        max_cx = std::max(max_cx, c.cx_duration);
    return cal.meas_duration + max_cx;
}

std::vector<double> assemble_probabilities(const DeviceCalibration& cal) {
    if (cal.qubits.empty())
        throw std::invalid_argument("calibration has no qubits");
    const double t = idle_timescale(cal);
    std::vector<double> probs;
    for (const auto& q : cal.qubits) probs.push_back(q.prep_error);
    for (const auto& q : cal.qubits) probs.push_back(q.meas_error);
    for (const auto& c : cal.couplings) probs.push_back(c.cx_error);
    for (const auto& q : cal.qubits)
        probs.push_back(idle_extrapolation(q.id_error, q.id_duration, t));
    return probs;
}

std::pair<double, double> mean_sigma(const std::vector<double>& probs) {
    double mean = 0.0;
    for (double p : probs) mean += p;
    mean /= static_cast<double>(probs.size());
    double var = 0.0;
    for (double p : probs) var += (p - mean) * (p - mean);
    var /= static_cast<double>(probs.size());  // population form
    return {mean, std::sqrt(var)};
}

}  // namespace

DeviceCalibration parse_calibration(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("calibration parse error: ") +
                                 e.what());
    }
    DeviceCalibration cal;
    try {
        cal.device = j.at("device").get<std::string>();
        cal.meas_duration =
            checked_duration(j.at("meas_duration").get<double>(),
                             "meas_duration");
        if (j.contains("quantum_volume") && !j["quantum_volume"].is_null())
            cal.quantum_volume = j["quantum_volume"].get<int>();
        for (const auto& qj : j.at("qubits")) {
            DeviceCalibration::Qubit q;
            q.id = qj.at("id").get<int>();
            q.prep_error =
                checked_prob(qj.at("prep_error").get<double>(), "prep_error");
            q.meas_error =
                checked_prob(qj.at("meas_error").get<double>(), "meas_error");
            q.id_error =
                checked_prob(qj.at("id_error").get<double>(), "id_error");
            q.id_duration = checked_duration(
                qj.at("id_duration").get<double>(), "id_duration");
            cal.qubits.push_back(q);
        }
        for (const auto& cj : j.at("couplings")) {
            DeviceCalibration::Coupling c;
            c.a = cj.at("qubits").at(0).get<int>();
            c.b = cj.at("qubits").at(1).get<int>();
            c.cx_error =
                checked_prob(cj.at("cx_error").get<double>(), "cx_error");
            c.cx_duration = checked_duration(
                cj.at("cx_duration").get<double>(), "cx_duration");
            cal.couplings.push_back(c);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("calibration field error: ") +
                                 e.what());
    }
    if (cal.qubits.empty())
        throw std::invalid_argument("calibration has no qubits");
    return cal;
}

DeviceCalibration load_calibration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_calibration(buf.str());
}

std::string calibration_to_json(const DeviceCalibration& cal) {
    nlohmann::json j;
    j["device"] = cal.device;
    j["meas_duration"] = cal.meas_duration;
    if (cal.quantum_volume) j["quantum_volume"] = *cal.quantum_volume;
    j["qubits"] = nlohmann::json::array();
    for (const auto& q : cal.qubits)
        j["qubits"].push_back({{"id", q.id},
                               {"prep_error", q.prep_error},
                               {"meas_error", q.meas_error},
                               {"id_error", q.id_error},
                               {"id_duration", q.id_duration}});
    j["couplings"] = nlohmann::json::array();
    for (const auto& c : cal.couplings)
        j["couplings"].push_back({{"qubits", {c.a, c.b}},
                                  {"cx_error", c.cx_error},
                                  {"cx_duration", c.cx_duration}});
    return j.dump(2);
}

std::pair<double, double> mean_error(const DeviceCalibration& cal) {
    return mean_sigma(assemble_probabilities(cal));
}

NoiseModel calibration_noise_model(const DeviceCalibration& cal) {
    if (cal.qubits.empty())
        throw std::invalid_argument("calibration has no qubits");
    const double t = idle_timescale(cal);
    NoiseModel model;
    const double nq = static_cast<double>(cal.qubits.size());
    for (const auto& q : cal.qubits) {
        model.p_prep += q.prep_error / nq;
        model.p_meas += q.meas_error / nq;
        model.p_idle += idle_extrapolation(q.id_error, q.id_duration, t) / nq;
    }
    if (!cal.couplings.empty()) {
        const double nc = static_cast<double>(cal.couplings.size());
        for (const auto& c : cal.couplings) model.p_cx += c.cx_error / nc;
    }
    return model;
}

}  // namespace floquet
