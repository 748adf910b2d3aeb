#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "floquet/codes.hpp"
#include "floquet/noise.hpp"
#include "floquet/simulator.hpp"

using namespace floquet;

namespace {

int count_kind(const Circuit& c, InstrKind kind) {
    return static_cast<int>(
        std::count_if(c.instructions.begin(), c.instructions.end(),
                      [&](const Instruction& i) { return i.kind == kind; }));
}

bool is_channel(InstrKind k) {
    return k == InstrKind::ChannelXFlip || k == InstrKind::ChannelDepol1 ||
           k == InstrKind::ChannelDepol2;
}

}  // namespace

TEST_CASE("idle extrapolation closed form") {
    CHECK(idle_extrapolation(0.01, 2.5, 2.5) == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(idle_extrapolation(0.01, 1.0, 0.0) == 0.0);

    // Composing two depolarizing(p) channels: p12 = p1 + p2 - 4 p1 p2 / 3.
    const double p = 0.01;
    const double composed = 2 * p - 4.0 * p * p / 3.0;
    CHECK(idle_extrapolation(p, 1.0, 2.0) == doctest::Approx(composed).epsilon(1e-12));
    CHECK(idle_extrapolation(0.01, 1.0, 2.0) == doctest::Approx(0.0198667).epsilon(1e-7 / 0.0198667));

    SUBCASE("monotone and saturating") {
        double prev = 0.0;
        for (double t : {0.5, 1.0, 5.0, 20.0, 100.0, 1e4}) {
            const double v = idle_extrapolation(0.02, 1.0, t);
            CHECK(v >= prev);
            prev = v;
        }
        CHECK(idle_extrapolation(0.02, 1.0, 1e7) == doctest::Approx(0.75).epsilon(1e-9));
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(idle_extrapolation(0.8, 1.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(idle_extrapolation(0.01, 0.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(idle_extrapolation(0.01, 1.0, -1.0), std::invalid_argument);
    }
}

TEST_CASE("noise model validation") {
    CHECK_THROWS_AS(apply_noise({}, NoiseModel{-0.1, 0, 0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_noise({}, NoiseModel{0, 1.5, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("channel insertion is syntactic and complete") {
    const Layout falcon = build_layout("falcon27");
    const Circuit base = schedule_rounds(falcon, honeycomb_schedule(7), true);
    const Circuit noisy = apply_noise(base, NoiseModel::uniform(0.01));

    // Original instruction order is preserved as a subsequence.
    size_t i = 0;
    for (const auto& instr : noisy.instructions) {
        if (is_channel(instr.kind)) continue;
        REQUIRE(i < base.instructions.size());
        CHECK(instr.kind == base.instructions[i].kind);
        CHECK(instr.q0 == base.instructions[i].q0);
        ++i;
    }
    CHECK(i == base.instructions.size());

    // One channel per prep, per measure, per CX, per idle-listed qubit.
    size_t idle_total = 0;
    for (const auto& instr : base.instructions)
        if (instr.kind == InstrKind::IdleWindow) idle_total += instr.idle.size();
    const int expected = count_kind(base, InstrKind::PrepZ) +
                         count_kind(base, InstrKind::MeasureZ) +
                         count_kind(base, InstrKind::GateCX) +
                         static_cast<int>(idle_total);
    const int channels = count_kind(noisy, InstrKind::ChannelXFlip) +
                         count_kind(noisy, InstrKind::ChannelDepol1) +
                         count_kind(noisy, InstrKind::ChannelDepol2);
    CHECK(channels == expected);

    CHECK(noisy.num_records == base.num_records);
    CHECK(noisy.tags.size() == base.tags.size());
}

TEST_CASE("single z-link with only CX noise gets exactly two channels") {
    const Layout patch = build_patch(1, 1);
    const Link* zlink = nullptr;
    for (const auto& l : patch.links)
        if (l.pauli == Pauli::Z) zlink = &l;
    REQUIRE(zlink != nullptr);
    Circuit c;
    c.num_qubits = patch.num_qubits();
    c.coupling = patch.coupling;
    for (auto& instr : link_measurement_subcircuit(*zlink, Basis::Z, true))
        c.append(instr);
    const Circuit noisy = apply_noise(c, NoiseModel{0, 0, 0.003, 0});
    CHECK(count_kind(noisy, InstrKind::ChannelDepol2) == 2);
    int firing = 0;
    for (const auto& instr : noisy.instructions)
        if (is_channel(instr.kind) && instr.prob > 0) ++firing;
    CHECK(firing == 2);
}

TEST_CASE("zero-strength channels are inert") {
    const Layout falcon = build_layout("falcon27");
    const Circuit base = schedule_rounds(falcon, honeycomb_schedule(7), true);
    const Circuit noisy = apply_noise(base, NoiseModel::uniform(0.0));

    // Identical outcomes, shot by shot, on the same stream seeds.
    for (uint64_t seed : {1ull, 99ull, 12345ull}) {
        const auto a = run_shot(base, seed);
        const auto b = run_shot(noisy, seed);
        CHECK(a == b);
    }
}

TEST_CASE("uniform helper fills all four fields") {
    const NoiseModel m = NoiseModel::uniform(0.25);
    CHECK(m.p_prep == 0.25);
    CHECK(m.p_meas == 0.25);
    CHECK(m.p_cx == 0.25);
    CHECK(m.p_idle == 0.25);
    CHECK(!m.is_zero());
    CHECK(NoiseModel{}.is_zero());
}
