#include "floquet/dense.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace floquet {

namespace {

constexpr int kMaxDenseQubits = 14;
constexpr double kDetEps = 1e-9;
constexpr double kInvSqrt2 = 0.70710678118654752440;

constexpr uint8_t kPauliOnA[15] = {0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3};
constexpr uint8_t kPauliOnB[15] = {1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3};

using cplx = std::complex<double>;

class DenseState {
  public:
    explicit DenseState(int n) : n_(n), amp_(size_t{1} << n) {
        if (n > kMaxDenseQubits)
            throw std::invalid_argument(
                "dense oracle is limited to 14 qubits");
        reset_all();
    }

    void reset_all() {
        std::fill(amp_.begin(), amp_.end(), cplx{0.0, 0.0});
        amp_[0] = 1.0;
    }

    void h(int q) {
        const size_t bit = size_t{1} << q;
        for_pairs(bit, [&](size_t i0, size_t i1) {
            const cplx a = amp_[i0], b = amp_[i1];
            amp_[i0] = (a + b) * kInvSqrt2;
            amp_[i1] = (a - b) * kInvSqrt2;
        });
    }

    void s(int q) { phase_on_ones(q, cplx{0.0, 1.0}); }
    void sdg(int q) { phase_on_ones(q, cplx{0.0, -1.0}); }
    void z(int q) { phase_on_ones(q, cplx{-1.0, 0.0}); }

    void x(int q) {
        const size_t bit = size_t{1} << q;
        for_pairs(bit, [&](size_t i0, size_t i1) { std::swap(amp_[i0], amp_[i1]); });
    }

    void y(int q) {
        const size_t bit = size_t{1} << q;
        const cplx pi{0.0, 1.0};
        for_pairs(bit, [&](size_t i0, size_t i1) {
            const cplx a = amp_[i0], b = amp_[i1];
            amp_[i1] = pi * a;
            amp_[i0] = -pi * b;
        });
    }

    void cx(int control, int target) {
        const size_t cb = size_t{1} << control;
        const size_t tb = size_t{1} << target;
        const size_t size = amp_.size();
        for (size_t i = 0; i < size; ++i)
            if ((i & cb) && !(i & tb)) std::swap(amp_[i], amp_[i | tb]);
    }

    int measure_z(int q, Rng& rng) {
        const size_t bit = size_t{1} << q;
        double p0 = 0.0;
        const size_t size = amp_.size();
        for (size_t i = 0; i < size; ++i)
            if (!(i & bit)) p0 += std::norm(amp_[i]);

        int outcome;
        if (p0 > 1.0 - kDetEps) {
            outcome = 0;
        } else if (p0 < kDetEps) {
            outcome = 1;
        } else {
            // Clifford circuits only ever give a fair coin here; consume one
            // coin exactly like the tableau engine so streams stay aligned.
            outcome = static_cast<int>(rng.bit());
        }
        const double norm = outcome == 0 ? p0 : 1.0 - p0;
        const double scale = 1.0 / std::sqrt(norm);
        for (size_t i = 0; i < size; ++i) {
            if (((i & bit) != 0) == (outcome == 1))
                amp_[i] *= scale;
            else
                amp_[i] = 0.0;
        }
        return outcome;
    }

  private:
    template <typename F>
    void for_pairs(size_t bit, F&& f) {
        const size_t size = amp_.size();
        for (size_t i = 0; i < size; ++i)
            if (!(i & bit)) f(i, i | bit);
    }

    void phase_on_ones(int q, cplx factor) {
        const size_t bit = size_t{1} << q;
        const size_t size = amp_.size();
        for (size_t i = 0; i < size; ++i)
            if (i & bit) amp_[i] *= factor;
    }

    int n_;
    std::vector<cplx> amp_;
};

void apply_pauli(DenseState& state, int pauli, int q) {
    switch (pauli) {
        case 1: state.x(q); break;
        case 2: state.y(q); break;
        case 3: state.z(q); break;
        default: break;
    }
}

void dense_shot_into(const Circuit& circuit, uint64_t stream_seed,
                     DenseState& state, uint8_t* out_bits) {
    state.reset_all();
    Rng rng(stream_seed);
    for (const auto& instr : circuit.instructions) {
        switch (instr.kind) {
            case InstrKind::PrepZ:
                if (state.measure_z(instr.q0, rng) == 1) state.x(instr.q0);
                break;
            case InstrKind::GateH: state.h(instr.q0); break;
            case InstrKind::GateS: state.s(instr.q0); break;
            case InstrKind::GateSdg: state.sdg(instr.q0); break;
            case InstrKind::GateX: state.x(instr.q0); break;
            case InstrKind::GateCX: state.cx(instr.q0, instr.q1); break;
            case InstrKind::MeasureZ:
                out_bits[instr.record] =
                    static_cast<uint8_t>(state.measure_z(instr.q0, rng));
                break;
            case InstrKind::LayerBoundary:
            case InstrKind::IdleWindow:
                break;
            case InstrKind::ChannelXFlip:
                if (instr.prob > 0 && rng.uniform() < instr.prob)
                    state.x(instr.q0);
                break;
            case InstrKind::ChannelDepol1:
                if (instr.prob > 0 && rng.uniform() < instr.prob)
                    apply_pauli(state, 1 + static_cast<int>(rng.below(3)),
                                instr.q0);
                break;
            case InstrKind::ChannelDepol2:
                if (instr.prob > 0 && rng.uniform() < instr.prob) {
                    const uint64_t k = rng.below(15);
                    apply_pauli(state, kPauliOnA[k], instr.q0);
                    apply_pauli(state, kPauliOnB[k], instr.q1);
                }
                break;
        }
    }
}

}  // namespace

std::vector<uint8_t> dense_run_shot(const Circuit& circuit,
                                    uint64_t stream_seed) {
    DenseState state(circuit.num_qubits);
    std::vector<uint8_t> bits(circuit.num_records, 0);
    dense_shot_into(circuit, stream_seed, state, bits.data());
    return bits;
}

ShotTable dense_oracle_run(const Circuit& circuit, int64_t n_shots,
                           uint64_t base_seed, int threads) {
    if (n_shots < 1) throw std::invalid_argument("need at least one shot");
    ShotTable table;
    table.resize(n_shots, circuit.num_records);
    table.base_seed = base_seed;
    table.circuit_id = circuit.layout_name;

    const int workers =
        static_cast<int>(std::min<int64_t>(resolve_threads(threads), n_shots));

    auto worker = [&](int64_t begin, int64_t end) {
        DenseState state(circuit.num_qubits);
        std::vector<uint8_t> bits(circuit.num_records, 0);
        for (int64_t k = begin; k < end; ++k) {
            dense_shot_into(circuit, Rng::shot_seed(base_seed, k), state,
                            bits.data());
            for (int r = 0; r < circuit.num_records; ++r)
                if (bits[r]) table.set(k, r, true);
        }
    };

    if (workers <= 1) {
        worker(0, n_shots);
        return table;
    }
    std::vector<std::thread> pool;
    const int64_t chunk = (n_shots + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int64_t begin = w * chunk;
        const int64_t end = std::min<int64_t>(begin + chunk, n_shots);
        if (begin >= end) break;
        pool.emplace_back(worker, begin, end);
    }
    for (auto& t : pool) t.join();
    return table;
}

}  // namespace floquet
