#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "floquet/circuit.hpp"
#include "floquet/lattice.hpp"

namespace floquet {

/// Parity set of measurement records whose XOR is deterministically 0 on
/// every noiseless shot; one per plaquette syndrome comparison.
struct Detector {
    int id = -1;
    int plaquette = -1;
    Color color = Color::Red;
    Basis basis = Basis::Native;  // Native for honeycomb, X/Z for Color code
    std::vector<int> records;     // sorted record indices
};

inline constexpr std::array<Color, 3> kRedGreenBlue{Color::Red, Color::Green,
                                                    Color::Blue};

/// Rounds cycle through `order` with basis Native. At least 7 rounds are
/// needed for one syndrome comparison on every plaquette.
std::vector<RoundSpec> honeycomb_schedule(
    int n_rounds, const std::array<Color, 3>& order = kRedGreenBlue);

/// Colors cycle red-green-blue while the basis alternates x/z, so the
/// schedule has period 6; syndrome changes of every W^alpha need 10 rounds.
/// The starting point is configurable; (red, x) is the default.
std::vector<RoundSpec> color_code_schedule(int n_rounds,
                                           Color start_color = Color::Red,
                                           Basis start_basis = Basis::X);

/// Record bookkeeping shared between schedule_rounds and the detector
/// builders: round r (1-based) measures the links of its color in ascending
/// link id, records numbered consecutively in program order.
struct RecordPlan {
    struct Entry {
        int round;
        int link;
        int instance;
    };
    std::vector<Entry> records;
    std::map<std::pair<int, int>, int> by_round_link;     // (round, link)
    std::map<std::pair<int, int>, int> by_link_instance;  // (link, instance)
};
RecordPlan plan_records(const Layout& layout,
                        const std::vector<RoundSpec>& rounds);

/// Honeycomb syndrome comparisons. With reset each detector XORs the 6
/// boundary-link outcomes of two consecutive round pairs; without reset the
/// same parity is re-expressed in the raw cumulative records (the recorded
/// bit at instance k is the XOR of parities 1..k, so a parity at instance k
/// expands to raw records k-1 and k).
std::vector<Detector> honeycomb_detectors(const Layout& layout,
                                          const std::vector<RoundSpec>& rounds,
                                          bool reset_aux);

/// Floquet-Color-code syndrome comparisons. W^alpha of a color-c plaquette is
/// evaluated from a single alpha-round of either non-c color (its 3 boundary
/// links of that color form a perfect matching of the hexagon); two
/// evaluations are compared only if no (c, not-alpha) round lies between
/// them, since such a round leaves the operator value uncorrelated.
/// Comparisons against the initialized state are never formed.
std::vector<Detector> color_code_detectors(
    const Layout& layout, const std::vector<RoundSpec>& rounds,
    bool reset_aux);

struct VerifyFailure {
    int detector_id;
    int trial;
};

/// Runs the noiseless simulator `trials` times with independent random
/// measurement outcomes and reports every detector whose record XOR is ever
/// 1. Shipped schedules must verify to an empty report.
std::vector<VerifyFailure> verify_detectors(const Circuit& circuit,
                                            const std::vector<Detector>& dets,
                                            int trials,
                                            uint64_t base_seed = 0xDE7EC70Bull);

}  // namespace floquet
