#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "floquet/lattice.hpp"

namespace floquet {

enum class Basis : uint8_t { X = 0, Y = 1, Z = 2, Native = 3 };

std::string to_string(Basis b);

enum class InstrKind : uint8_t {
    PrepZ,
    GateH,
    GateS,
    GateSdg,
    GateX,
    GateCX,
    MeasureZ,
    LayerBoundary,
    IdleWindow,
    // Pauli noise channels inserted by apply_noise.
    ChannelXFlip,
    ChannelDepol1,
    ChannelDepol2,
};

struct Instruction {
    InstrKind kind;
    int q0 = -1;
    int q1 = -1;          // GateCX / ChannelDepol2 only
    int record = -1;      // MeasureZ only
    double prob = 0.0;    // channels only
    std::vector<int> idle;  // IdleWindow only

    static Instruction op1(InstrKind k, int q) { return {k, q, -1, -1, 0.0, {}}; }
    static Instruction cx(int control, int target) {
        return {InstrKind::GateCX, control, target, -1, 0.0, {}};
    }
};

struct RecordTag {
    int round = 0;     // 1-based
    int link = -1;     // link id
    int instance = 0;  // 1-based count of measurements of this link's aux
};

struct Circuit {
    std::string layout_name;
    int num_qubits = 0;
    std::vector<Instruction> instructions;
    int num_records = 0;
    std::vector<RecordTag> tags;  // indexed by record
    std::vector<std::pair<int, int>> coupling;  // copy for validation

    void append(Instruction instr);
    bool cx_allowed(int a, int b) const;
};

struct RoundSpec {
    Color color;
    Basis basis;  // Native (honeycomb) or X/Z (Floquet Color code)
};

/// Parity measurement of sigma^basis x sigma^basis on the link endpoints via
/// CX gates onto the auxiliary. Without reset_aux the auxiliary keeps the
/// state left by its previous measurement, so the recorded bit is the XOR of
/// all parities measured on that auxiliary so far. Record indices are
/// assigned when the instructions are appended to a Circuit.
std::vector<Instruction> link_measurement_subcircuit(const Link& link,
                                                     Basis basis,
                                                     bool reset_aux);

/// Full schedule: per round, the subcircuit of every link of the round color
/// (ascending link id; basis Native resolves to each link's own type). Rounds
/// group into layers of 3; each layer opens with an idle window over all code
/// and auxiliary qubits and closes with an idle window over the qubits not
/// measured in that layer, then a layer boundary. A round whose color has no
/// links measures nothing; the schedule must measure at least one link
/// somewhere.
Circuit schedule_rounds(const Layout& layout,
                        const std::vector<RoundSpec>& rounds, bool reset_aux);

std::string circuit_to_text(const Circuit& circuit);

}  // namespace floquet
