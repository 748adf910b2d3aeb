#include "floquet/simulator.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace floquet {

namespace {

constexpr uint8_t kPauliOnA[15] = {0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3};
constexpr uint8_t kPauliOnB[15] = {1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3};

}  // namespace

TableauState::TableauState(int num_qubits, const simd::RowOps* ops)
    : n_(num_qubits),
      words_((static_cast<size_t>(num_qubits) + 63) / 64),
      stride_(2 * words_),
      ops_(ops ? ops : &simd::active_ops()),
      buf_(static_cast<size_t>(2 * num_qubits) * stride_, 0),
      r_(2 * num_qubits, 0),
      scratch_(stride_, 0) {
    if (num_qubits <= 0) throw std::invalid_argument("need at least 1 qubit");
    reset_all();
}

void TableauState::reset_all() {
    std::fill(buf_.begin(), buf_.end(), 0);
    std::fill(r_.begin(), r_.end(), 0);
    for (int i = 0; i < n_; ++i) {
        row_x(i)[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63);
        row_z(n_ + i)[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63);
    }
}

bool TableauState::x_bit(int row, int q) const {
    return (row_x(row)[static_cast<size_t>(q) >> 6] >> (q & 63)) & 1u;
}

bool TableauState::z_bit(int row, int q) const {
    return (row_z(row)[static_cast<size_t>(q) >> 6] >> (q & 63)) & 1u;
}

void TableauState::h(int q) {
    const size_t w = static_cast<size_t>(q) >> 6;
    const uint64_t bit = 1ull << (q & 63);
    for (int i = 0; i < 2 * n_; ++i) {
        uint64_t* xw = row_x(i) + w;
        uint64_t* zw = row_z(i) + w;
        const uint64_t xb = *xw & bit;
        const uint64_t zb = *zw & bit;
        if (xb && zb) r_[i] = (r_[i] + 2) & 3;
        const uint64_t flip = xb ^ zb;
        *xw ^= flip;
        *zw ^= flip;
    }
}

void TableauState::s(int q) {
    const size_t w = static_cast<size_t>(q) >> 6;
    const uint64_t bit = 1ull << (q & 63);
    for (int i = 0; i < 2 * n_; ++i) {
        const uint64_t xb = row_x(i)[w] & bit;
        if (xb) {
            r_[i] = (r_[i] + 1) & 3;
            row_z(i)[w] ^= bit;
        }
    }
}

void TableauState::sdg(int q) {
    const size_t w = static_cast<size_t>(q) >> 6;
    const uint64_t bit = 1ull << (q & 63);
    for (int i = 0; i < 2 * n_; ++i) {
        const uint64_t xb = row_x(i)[w] & bit;
        if (xb) {
            r_[i] = (r_[i] + 3) & 3;
            row_z(i)[w] ^= bit;
        }
    }
}

void TableauState::x(int q) {
    const size_t w = static_cast<size_t>(q) >> 6;
    const uint64_t bit = 1ull << (q & 63);
    for (int i = 0; i < 2 * n_; ++i)
        if (row_z(i)[w] & bit) r_[i] = (r_[i] + 2) & 3;
}

void TableauState::z(int q) {
    const size_t w = static_cast<size_t>(q) >> 6;
    const uint64_t bit = 1ull << (q & 63);
    for (int i = 0; i < 2 * n_; ++i)
        if (row_x(i)[w] & bit) r_[i] = (r_[i] + 2) & 3;
}

void TableauState::y(int q) {
    const size_t w = static_cast<size_t>(q) >> 6;
    const uint64_t bit = 1ull << (q & 63);
    for (int i = 0; i < 2 * n_; ++i) {
        const bool xb = row_x(i)[w] & bit;
        const bool zb = row_z(i)[w] & bit;
        if (xb != zb) r_[i] = (r_[i] + 2) & 3;
    }
}

void TableauState::cx(int control, int target) {
    const size_t wc = static_cast<size_t>(control) >> 6;
    const size_t wt = static_cast<size_t>(target) >> 6;
    const uint64_t bc = 1ull << (control & 63);
    const uint64_t bt = 1ull << (target & 63);
    for (int i = 0; i < 2 * n_; ++i) {
        if (row_x(i)[wc] & bc) row_x(i)[wt] ^= bt;
        if (row_z(i)[wt] & bt) row_z(i)[wc] ^= bc;
    }
}

void TableauState::row_mult(int dst, int src) {
    const bool parity =
        ops_->mult_into(row_x(dst), row_z(dst), row_x(src), row_z(src), words_);
    r_[dst] = (r_[dst] + r_[src] + (parity ? 2 : 0)) & 3;
}

int TableauState::measure_z(int q, Rng& rng) {
    int pivot = -1;
    for (int i = n_; i < 2 * n_; ++i) {
        if (x_bit(i, q)) {
            pivot = i;
            break;
        }
    }

    if (pivot >= 0) {
        for (int i = 0; i < 2 * n_; ++i)
            if (i != pivot && x_bit(i, q)) row_mult(i, pivot);
        // Old stabilizer becomes the destabilizer of the new +-Z_q row.
        std::memcpy(row_x(pivot - n_), row_x(pivot),
                    stride_ * sizeof(uint64_t));
        r_[pivot - n_] = r_[pivot];
        std::memset(row_x(pivot), 0, stride_ * sizeof(uint64_t));
        row_z(pivot)[static_cast<size_t>(q) >> 6] |= 1ull << (q & 63);
        const int bit = static_cast<int>(rng.bit());
        r_[pivot] = bit ? 2 : 0;
        return bit;
    }

    // Deterministic: multiply out the stabilizer rows flagged by the
    // destabilizer X bits; the accumulated phase is the outcome.
    std::fill(scratch_.begin(), scratch_.end(), 0);
    scratch_r_ = 0;
    for (int i = 0; i < n_; ++i) {
        if (!x_bit(i, q)) continue;
        const int srow = n_ + i;
        const bool parity = ops_->mult_into(scratch_.data(),
                                            scratch_.data() + words_,
                                            row_x(srow), row_z(srow), words_);
        scratch_r_ = (scratch_r_ + r_[srow] + (parity ? 2 : 0)) & 3;
    }
    return scratch_r_ == 2 ? 1 : 0;
}

void TableauState::prep_z(int q, Rng& rng) {
    if (measure_z(q, rng) == 1) x(q);
}

bool TableauState::check_symplectic() const {
    for (int i = 0; i < 2 * n_; ++i) {
        // Hermitian phase: i-power parity matches the count of XZ sites.
        const size_t y_count =
            ops_->popcount_and(row_x(i), row_z(i), words_);
        if ((r_[i] & 1) != (y_count & 1)) return false;
        for (int j = i + 1; j < 2 * n_; ++j) {
            const bool anti =
                ops_->and_parity(row_x(i), row_z(j), words_) !=
                ops_->and_parity(row_z(i), row_x(j), words_);
            const bool expect_anti = (j == i + n_);
            if (anti != expect_anti) return false;
        }
    }
    return true;
}

void ShotTable::resize(int64_t n_shots, int records) {
    shots = n_shots;
    num_records = records;
    bits.assign(static_cast<size_t>(n_shots) * words_per_shot(), 0);
}

bool ShotTable::get(int64_t shot, int record) const {
    const size_t idx = static_cast<size_t>(shot) * words_per_shot() +
                       (static_cast<size_t>(record) >> 6);
    return (bits[idx] >> (record & 63)) & 1u;
}

void ShotTable::set(int64_t shot, int record, bool value) {
    const size_t idx = static_cast<size_t>(shot) * words_per_shot() +
                       (static_cast<size_t>(record) >> 6);
    const uint64_t bit = 1ull << (record & 63);
    if (value)
        bits[idx] |= bit;
    else
        bits[idx] &= ~bit;
}

namespace {

constexpr char kShotMagic[4] = {'F', 'Q', 'S', 'T'};
constexpr uint32_t kShotVersion = 1;

template <typename T>
void put(std::ofstream& out, T value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T take(std::ifstream& in) {
    T value{};
    in.read(reinterpret_cast<char*>(&value), sizeof(T));
    return value;
}

}  // namespace

void ShotTable::save_binary(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out.write(kShotMagic, 4);
    put(out, kShotVersion);
    put(out, static_cast<uint64_t>(shots));
    put(out, static_cast<uint32_t>(num_records));
    put(out, base_seed);
    put(out, static_cast<uint32_t>(circuit_id.size()));
    out.write(circuit_id.data(),
              static_cast<std::streamsize>(circuit_id.size()));
    out.write(reinterpret_cast<const char*>(bits.data()),
              static_cast<std::streamsize>(bits.size() * sizeof(uint64_t)));
    if (!out) throw std::runtime_error("write failed: " + path);
}

ShotTable ShotTable::load_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kShotMagic, 4) != 0)
        throw std::runtime_error("not a shot table: " + path);
    if (take<uint32_t>(in) != kShotVersion)
        throw std::runtime_error("unsupported shot-table version");
    ShotTable table;
    const uint64_t shots = take<uint64_t>(in);
    const uint32_t records = take<uint32_t>(in);
    table.base_seed = take<uint64_t>(in);
    const uint32_t id_len = take<uint32_t>(in);
    table.circuit_id.resize(id_len);
    in.read(table.circuit_id.data(), id_len);
    table.resize(static_cast<int64_t>(shots), static_cast<int>(records));
    in.read(reinterpret_cast<char*>(table.bits.data()),
            static_cast<std::streamsize>(table.bits.size() * sizeof(uint64_t)));
    if (!in) throw std::runtime_error("truncated shot table: " + path);
    return table;
}

void ShotTable::write_csv(std::ostream& out) const {
    std::string line(num_records, '0');
    for (int64_t s = 0; s < shots; ++s) {
        for (int r = 0; r < num_records; ++r) line[r] = get(s, r) ? '1' : '0';
        out << line << '\n';
    }
}

namespace {

void apply_pauli(TableauState& state, int pauli, int q) {
    switch (pauli) {
        case 1: state.x(q); break;
        case 2: state.y(q); break;
        case 3: state.z(q); break;
        default: break;
    }
}

void run_shot_into(const Circuit& circuit, uint64_t stream_seed,
                   TableauState& state, uint8_t* out_bits) {
    state.reset_all();
    Rng rng(stream_seed);
    for (const auto& instr : circuit.instructions) {
        switch (instr.kind) {
            case InstrKind::PrepZ: state.prep_z(instr.q0, rng); break;
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

std::vector<uint8_t> run_shot(const Circuit& circuit, uint64_t stream_seed,
                              const simd::RowOps* ops) {
    TableauState state(circuit.num_qubits, ops);
    std::vector<uint8_t> bits(circuit.num_records, 0);
    run_shot_into(circuit, stream_seed, state, bits.data());
    return bits;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FLOQUET_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

ShotTable run_shots(const Circuit& circuit, int64_t n_shots,
                    uint64_t base_seed, int threads,
                    const simd::RowOps* ops) {
    if (n_shots < 1) throw std::invalid_argument("need at least one shot");
    ShotTable table;
    table.resize(n_shots, circuit.num_records);
    table.base_seed = base_seed;
    table.circuit_id = circuit.layout_name;

    const int workers =
        static_cast<int>(std::min<int64_t>(resolve_threads(threads), n_shots));

    auto worker = [&](int64_t begin, int64_t end) {
        TableauState state(circuit.num_qubits, ops);
        std::vector<uint8_t> bits(circuit.num_records, 0);
        for (int64_t k = begin; k < end; ++k) {
            run_shot_into(circuit, Rng::shot_seed(base_seed, k), state,
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
