#include "doctest.h"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "floquet/analysis.hpp"
#include "floquet/dense.hpp"
#include "floquet/simulator.hpp"

using namespace floquet;

namespace {

Circuit patch_honeycomb_circuit(bool reset, double p) {
    const Layout patch = build_patch(1, 1);
    const Circuit base = schedule_rounds(patch, honeycomb_schedule(7), reset);
    return apply_noise(base, NoiseModel::uniform(p));
}

double tvd(const std::map<std::vector<uint8_t>, int>& a,
           const std::map<std::vector<uint8_t>, int>& b, int n) {
    std::map<std::vector<uint8_t>, double> diff;
    for (const auto& [key, cnt] : a) diff[key] += cnt;
    for (const auto& [key, cnt] : b) diff[key] -= cnt;
    double total = 0;
    for (const auto& [key, d] : diff) total += std::fabs(d);
    return total / (2.0 * n);
}

}  // namespace

TEST_CASE("dense oracle rejects large circuits") {
    Circuit c;
    c.num_qubits = 20;
    CHECK_THROWS_AS(dense_oracle_run(c, 1, 0), std::invalid_argument);
}

TEST_CASE("tableau and dense oracle agree shot by shot on patch(1,1)") {
    // Matched stream seeds make the two engines bit-identical, which is
    // stronger than the distributional agreement required downstream.
    for (bool reset : {true, false}) {
        for (double p : {0.0, 0.1}) {
            CAPTURE(reset);
            CAPTURE(p);
            const Circuit c = patch_honeycomb_circuit(reset, p);
            REQUIRE(c.num_qubits == 12);
            for (int k = 0; k < 200; ++k) {
                const uint64_t seed = Rng::shot_seed(0xACE5, k);
                CHECK(run_shot(c, seed) == dense_run_shot(c, seed));
            }
        }
    }
}

TEST_CASE("color-code circuits on patch(1,1) agree between engines") {
    const Layout patch = build_patch(1, 1);
    const auto sched = color_code_schedule(10);
    for (bool reset : {true, false}) {
        const auto dets = color_code_detectors(patch, sched, reset);
        CHECK(dets.size() == 2);  // one detector per basis survives blocking
        const Circuit base = schedule_rounds(patch, sched, reset);
        CHECK(verify_detectors(base, dets, 50).empty());
        for (double p : {0.0, 0.05}) {
            const Circuit c = apply_noise(base, NoiseModel::uniform(p));
            for (int k = 0; k < 100; ++k) {
                const uint64_t seed = Rng::shot_seed(0xC0DE, k);
                CHECK(run_shot(c, seed) == dense_run_shot(c, seed));
            }
        }
    }
}

TEST_CASE("per-detector rates match between engines at 20k shots") {
    const Layout patch = build_patch(1, 1);
    const auto dets = honeycomb_detectors(patch, honeycomb_schedule(7), true);
    const Circuit c = patch_honeycomb_circuit(true, 0.1);
    const int64_t shots = 20000;

    const ShotTable tab = run_shots(c, shots, 77, 2);
    const ShotTable dense = dense_oracle_run(c, shots, 78, 2);

    const auto ra = detection_rates(tab, dets);
    const auto rb = detection_rates(dense, dets);
    REQUIRE(ra.detectors.size() == rb.detectors.size());
    for (size_t i = 0; i < ra.detectors.size(); ++i) {
        const double sigma = std::sqrt(
            ra.detectors[i].stderr_ * ra.detectors[i].stderr_ +
            rb.detectors[i].stderr_ * rb.detectors[i].stderr_);
        CHECK(std::fabs(ra.detectors[i].rate - rb.detectors[i].rate) <=
              3.0 * sigma);
    }
}

TEST_CASE("noiseless outcome distributions match within TVD 0.02") {
    // Single-link subcircuits on the patch, via independent seeds.
    const Layout patch = build_patch(1, 1);
    const int n = 10000;
    for (const auto& link : patch.links) {
        for (bool reset : {true, false}) {
            Circuit c;
            c.num_qubits = patch.num_qubits();
            c.coupling = patch.coupling;
            const Basis basis = static_cast<Basis>(static_cast<int>(link.pauli));
            for (int rep = 0; rep < 2; ++rep)
                for (auto& i : link_measurement_subcircuit(link, basis, reset))
                    c.append(i);

            std::map<std::vector<uint8_t>, int> ha, hb;
            for (int k = 0; k < n; ++k) {
                ha[run_shot(c, Rng::shot_seed(1000, k))]++;
                hb[dense_run_shot(c, Rng::shot_seed(2000, k))]++;
            }
            CAPTURE(link.id);
            CAPTURE(reset);
            CHECK(tvd(ha, hb, n) < 0.02);
        }
    }
}

TEST_CASE("deterministic circuits give bit-identical engine outputs") {
    // Bell-pair correlations plus mid-circuit resets, all deterministic
    // after the first coin.
    using I = Instruction;
    Circuit c;
    c.num_qubits = 3;
    for (auto instr : {I::op1(InstrKind::GateH, 0), I::cx(0, 1),
                       I::op1(InstrKind::MeasureZ, 0),
                       I::op1(InstrKind::MeasureZ, 1),
                       I::op1(InstrKind::PrepZ, 1),
                       I::op1(InstrKind::MeasureZ, 1),
                       I::op1(InstrKind::GateX, 2),
                       I::op1(InstrKind::MeasureZ, 2)})
        c.append(instr);
    for (int k = 0; k < 100; ++k) {
        const uint64_t seed = Rng::shot_seed(5, k);
        const auto a = run_shot(c, seed);
        const auto b = dense_run_shot(c, seed);
        CHECK(a == b);
        CHECK(a[0] == a[1]);  // Bell correlation
        CHECK(a[2] == 0);     // after reset
        CHECK(a[3] == 1);     // X|0>
    }
}

TEST_CASE("dense oracle distribution sanity on a fair coin") {
    using I = Instruction;
    Circuit c;
    c.num_qubits = 1;
    c.append(I::op1(InstrKind::GateH, 0));
    c.append(I::op1(InstrKind::MeasureZ, 0));
    const ShotTable t = dense_oracle_run(c, 10000, 31, 2);
    int64_t ones = 0;
    for (int64_t s = 0; s < t.shots; ++s) ones += t.get(s, 0);
    const double rate = static_cast<double>(ones) / static_cast<double>(t.shots);
    CHECK(rate > 0.485);
    CHECK(rate < 0.515);
}
