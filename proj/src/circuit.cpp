#include "floquet/circuit.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace floquet {

std::string to_string(Basis b) {
    switch (b) {
        case Basis::X: return "x";
        case Basis::Y: return "y";
        case Basis::Z: return "z";
        case Basis::Native: return "native";
    }
    return "?";
}

void Circuit::append(Instruction instr) {
    if (instr.kind == InstrKind::MeasureZ) {
        instr.record = num_records++;
        tags.push_back({});
    }
    instructions.push_back(std::move(instr));
}

bool Circuit::cx_allowed(int a, int b) const {
    const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    return std::binary_search(coupling.begin(), coupling.end(), key);
}

std::vector<Instruction> link_measurement_subcircuit(const Link& link,
                                                     Basis basis,
                                                     bool reset_aux) {
    if (basis == Basis::Native)
        throw std::invalid_argument(
            "resolve Native to the link type before building the subcircuit");
    std::vector<Instruction> out;
    if (reset_aux) out.push_back(Instruction::op1(InstrKind::PrepZ, link.aux));

    // Conjugations taking sigma^basis to sigma^z on the endpoints.
    auto basis_in = [&](int q) {
        if (basis == Basis::X) {
            out.push_back(Instruction::op1(InstrKind::GateH, q));
        } else if (basis == Basis::Y) {
            out.push_back(Instruction::op1(InstrKind::GateSdg, q));
            out.push_back(Instruction::op1(InstrKind::GateH, q));
        }
    };
    auto basis_out = [&](int q) {
        if (basis == Basis::X) {
            out.push_back(Instruction::op1(InstrKind::GateH, q));
        } else if (basis == Basis::Y) {
            out.push_back(Instruction::op1(InstrKind::GateH, q));
            out.push_back(Instruction::op1(InstrKind::GateS, q));
        }
    };

    basis_in(link.endpoints[0]);
    basis_in(link.endpoints[1]);
    out.push_back(Instruction::cx(link.endpoints[0], link.aux));
    out.push_back(Instruction::cx(link.endpoints[1], link.aux));
    basis_out(link.endpoints[0]);
    basis_out(link.endpoints[1]);
    out.push_back(Instruction::op1(InstrKind::MeasureZ, link.aux));
    return out;
}

Circuit schedule_rounds(const Layout& layout,
                        const std::vector<RoundSpec>& rounds, bool reset_aux) {
    if (rounds.empty()) throw std::invalid_argument("empty round list");

    Circuit circuit;
    circuit.layout_name = layout.name;
    circuit.num_qubits = layout.num_qubits();
    circuit.coupling = layout.coupling;

    std::vector<int> active;  // code + auxiliary qubits
    for (int q = 0; q < layout.num_qubits(); ++q)
        if (layout.qubits[q] != QubitRole::Unused) active.push_back(q);

    std::vector<int> instances(layout.links.size(), 0);
    size_t total_links = 0;

    const int n_rounds = static_cast<int>(rounds.size());
    for (int layer_start = 0; layer_start < n_rounds; layer_start += 3) {
        const int layer_end = std::min(layer_start + 3, n_rounds);

        Instruction idle{InstrKind::IdleWindow, -1, -1, -1, 0.0, active};
        circuit.append(idle);

        std::set<int> measured;
        for (int r = layer_start; r < layer_end; ++r) {
            const RoundSpec& spec = rounds[r];
            for (int link_id : layout.links_of_color(spec.color)) {
                const Link& link = layout.links[link_id];
                const Basis basis =
                    spec.basis == Basis::Native
                        ? static_cast<Basis>(static_cast<int>(link.pauli))
                        : spec.basis;
                const int first_record = circuit.num_records;
                for (auto& instr :
                     link_measurement_subcircuit(link, basis, reset_aux)) {
                    if (instr.kind == InstrKind::GateCX &&
                        !circuit.cx_allowed(instr.q0, instr.q1))
                        throw std::logic_error("CX outside coupling map");
                    circuit.append(instr);
                }
                circuit.tags[first_record] = {r + 1, link_id,
                                              ++instances[link_id]};
                measured.insert(link.aux);
                ++total_links;
            }
        }

        Instruction meas_idle{InstrKind::IdleWindow, -1, -1, -1, 0.0, {}};
        for (int q : active)
            if (!measured.count(q)) meas_idle.idle.push_back(q);
        circuit.append(meas_idle);
        circuit.append({InstrKind::LayerBoundary, -1, -1, -1, 0.0, {}});
    }

    if (total_links == 0)
        throw std::invalid_argument("schedule measures no links on " +
                                    layout.name);
    return circuit;
}

std::string circuit_to_text(const Circuit& circuit) {
    std::ostringstream out;
    for (const auto& instr : circuit.instructions) {
        switch (instr.kind) {
            case InstrKind::PrepZ: out << "PZ " << instr.q0; break;
            case InstrKind::GateH: out << "H " << instr.q0; break;
            case InstrKind::GateS: out << "S " << instr.q0; break;
            case InstrKind::GateSdg: out << "SDG " << instr.q0; break;
            case InstrKind::GateX: out << "X " << instr.q0; break;
            case InstrKind::GateCX:
                out << "CX " << instr.q0 << " " << instr.q1;
                break;
            case InstrKind::MeasureZ: {
                out << "MZ " << instr.q0 << " #" << instr.record;
                const RecordTag& tag = circuit.tags[instr.record];
                out << " ; round=" << tag.round << " link=" << tag.link
                    << " inst=" << tag.instance;
                break;
            }
            case InstrKind::LayerBoundary: out << "LAYER"; break;
            case InstrKind::IdleWindow: {
                out << "IDLE";
                for (int q : instr.idle) out << " " << q;
                break;
            }
            case InstrKind::ChannelXFlip:
                out << "XFLIP(" << instr.prob << ") " << instr.q0;
                break;
            case InstrKind::ChannelDepol1:
                out << "DEPOL1(" << instr.prob << ") " << instr.q0;
                break;
            case InstrKind::ChannelDepol2:
                out << "DEPOL2(" << instr.prob << ") " << instr.q0 << " "
                    << instr.q1;
                break;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace floquet
