#include "floquet/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace floquet {

void NoiseModel::validate() const {
    for (double p : {p_prep, p_meas, p_cx, p_idle})
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("noise probability outside [0, 1]");
}

Circuit apply_noise(const Circuit& circuit, const NoiseModel& model) {
    model.validate();
    Circuit noisy;
    noisy.layout_name = circuit.layout_name;
    noisy.num_qubits = circuit.num_qubits;
    noisy.num_records = circuit.num_records;
    noisy.tags = circuit.tags;
    noisy.coupling = circuit.coupling;
    noisy.instructions.reserve(circuit.instructions.size() * 2);

    for (const auto& instr : circuit.instructions) {
        switch (instr.kind) {
            case InstrKind::PrepZ:
                noisy.instructions.push_back(instr);
                noisy.instructions.push_back({InstrKind::ChannelXFlip,
                                              instr.q0, -1, -1, model.p_prep,
                                              {}});
                break;
            case InstrKind::MeasureZ:
                noisy.instructions.push_back({InstrKind::ChannelXFlip,
                                              instr.q0, -1, -1, model.p_meas,
                                              {}});
                noisy.instructions.push_back(instr);
                break;
            case InstrKind::GateCX:
                noisy.instructions.push_back(instr);
                noisy.instructions.push_back({InstrKind::ChannelDepol2,
                                              instr.q0, instr.q1, -1,
                                              model.p_cx, {}});
                break;
            case InstrKind::IdleWindow:
                noisy.instructions.push_back(instr);
                for (int q : instr.idle)
                    noisy.instructions.push_back({InstrKind::ChannelDepol1, q,
                                                  -1, -1, model.p_idle, {}});
                break;
            default:
                noisy.instructions.push_back(instr);
        }
    }
    return noisy;
}

double idle_extrapolation(double p_id, double t_id, double t) {
    if (!(p_id >= 0.0 && p_id <= 0.75))
        throw std::invalid_argument(
            "p_id must lie in [0, 3/4] for a depolarizing channel");
    if (!(t_id > 0.0)) throw std::invalid_argument("t_id must be positive");
    if (!(t >= 0.0)) throw std::invalid_argument("t must be nonnegative");
    return 0.75 * (1.0 - std::pow(1.0 - 4.0 * p_id / 3.0, t / t_id));
}

}  // namespace floquet
