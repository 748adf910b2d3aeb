#pragma once

#include "floquet/circuit.hpp"

namespace floquet {

/// Circuit-level Pauli noise: bit flips after reset and before measurement,
/// two-qubit depolarizing after each CX, one-qubit depolarizing on idling
/// qubits. The uniform model sets all four strengths to one p.
struct NoiseModel {
    double p_prep = 0.0;
    double p_meas = 0.0;
    double p_cx = 0.0;
    double p_idle = 0.0;

    static NoiseModel uniform(double p) { return {p, p, p, p}; }
    bool is_zero() const {
        return p_prep == 0.0 && p_meas == 0.0 && p_cx == 0.0 && p_idle == 0.0;
    }
    void validate() const;
};

/// Inserts channel instructions; the original instruction order is kept and
/// channels are emitted even at zero strength (inert markers). Record indices
/// and tags are unchanged.
Circuit apply_noise(const Circuit& circuit, const NoiseModel& model);

/// Depolarizing strength over duration t, extrapolated from strength p_id
/// over the reference timescale t_id by channel composition:
///   p(t) = (3/4) * (1 - (1 - 4 p_id / 3)^(t / t_id)).
double idle_extrapolation(double p_id, double t_id, double t);

}  // namespace floquet
