#pragma once

#include "floquet/simulator.hpp"

namespace floquet {

/// Full state-vector simulation of the same instruction set, for
/// small-instance verification of the tableau engine (<= 14 qubits). Uses
/// the identical per-shot stream derivation and randomness consumption
/// (channels draw one uniform each, random measurements one coin), so
/// matched seeds give matched shots.
std::vector<uint8_t> dense_run_shot(const Circuit& circuit,
                                    uint64_t stream_seed);

ShotTable dense_oracle_run(const Circuit& circuit, int64_t n_shots,
                           uint64_t base_seed, int threads = 0);

}  // namespace floquet
