#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "floquet/circuit.hpp"
#include "floquet/rng.hpp"
#include "floquet/simd.hpp"

namespace floquet {

/// Aaronson-Gottesman stabilizer tableau with bit-packed rows. Rows 0..n-1
/// are destabilizers, rows n..2n-1 stabilizers; each row is a Pauli monomial
/// in the i^r X^x Z^z convention with r tracked mod 4 per row. Row arithmetic
/// goes through the simd kernels.
class TableauState {
  public:
    explicit TableauState(int num_qubits,
                          const simd::RowOps* ops = nullptr);

    int num_qubits() const { return n_; }
    void reset_all();  // back to |0...0>

    void h(int q);
    void s(int q);
    void sdg(int q);
    void x(int q);
    void y(int q);
    void z(int q);
    void cx(int control, int target);

    /// Z measurement: deterministic bit when +-Z_q is in the stabilizer
    /// group, otherwise a fair coin from rng.
    int measure_z(int q, Rng& rng);

    /// Reset to |0>: measure, flip on outcome 1. Draws a coin only when the
    /// measurement is random (same consumption as the dense oracle).
    void prep_z(int q, Rng& rng);

    bool x_bit(int row, int q) const;
    bool z_bit(int row, int q) const;
    uint8_t phase(int row) const { return r_[row]; }

    /// Full generating-set validity: rows pairwise commute except each
    /// (destabilizer k, stabilizer k) pair, and row phases are Hermitian.
    bool check_symplectic() const;

  private:
    uint64_t* row_x(int i) { return buf_.data() + static_cast<size_t>(i) * stride_; }
    uint64_t* row_z(int i) { return row_x(i) + words_; }
    const uint64_t* row_x(int i) const {
        return buf_.data() + static_cast<size_t>(i) * stride_;
    }
    const uint64_t* row_z(int i) const { return row_x(i) + words_; }

    void row_mult(int dst, int src);  // row_dst <- row_src * row_dst

    int n_;
    size_t words_;
    size_t stride_;
    const simd::RowOps* ops_;
    std::vector<uint64_t> buf_;
    std::vector<uint8_t> r_;
    std::vector<uint64_t> scratch_;
    uint8_t scratch_r_ = 0;
};

/// Bit matrix of measurement outcomes, shots x records.
struct ShotTable {
    int64_t shots = 0;
    int num_records = 0;
    uint64_t base_seed = 0;
    std::string circuit_id;
    std::vector<uint64_t> bits;  // row-major, packed per shot

    size_t words_per_shot() const {
        return (static_cast<size_t>(num_records) + 63) / 64;
    }
    void resize(int64_t n_shots, int records);
    bool get(int64_t shot, int record) const;
    void set(int64_t shot, int record, bool value);

    void save_binary(const std::string& path) const;
    static ShotTable load_binary(const std::string& path);
    void write_csv(std::ostream& out) const;
};

/// One shot from an explicit stream seed (see rng.hpp for the derivation
/// used by run_shots).
std::vector<uint8_t> run_shot(const Circuit& circuit, uint64_t stream_seed,
                              const simd::RowOps* ops = nullptr);

/// Monte-Carlo shots; shot k runs on the stream derived from (base_seed, k),
/// so the table is independent of thread count. threads <= 0 means the
/// FLOQUET_THREADS env var, then hardware concurrency.
ShotTable run_shots(const Circuit& circuit, int64_t n_shots,
                    uint64_t base_seed, int threads = 0,
                    const simd::RowOps* ops = nullptr);

int resolve_threads(int requested);

}  // namespace floquet
