#pragma once

#include <cstddef>
#include <cstdint>

namespace floquet::simd {

/// Kernels over bit-packed Pauli rows (little-endian uint64 words).
///
/// Every backend must produce bit-identical results; the scalar kernels are
/// the reference semantics and the vector backends are checked against them
/// in the test suite.
struct RowOps {
    /// dst ^= src, word-wise.
    void (*xor_rows)(uint64_t* dst, const uint64_t* src, size_t words);

    /// Parity (mod 2) of popcount(a & b).
    bool (*and_parity)(const uint64_t* a, const uint64_t* b, size_t words);

    /// popcount(a & b).
    size_t (*popcount_and)(const uint64_t* a, const uint64_t* b, size_t words);

    /// Fused Pauli row multiply, dst <- src * dst (X/Z halves handled by the
    /// caller as two ranges). Computes parity(src_z & dst_x) with the OLD
    /// dst_x, then dst_x ^= src_x and dst_z ^= src_z. The returned parity is
    /// the sign correction exponent/2 for the i^r X^x Z^z row convention.
    bool (*mult_into)(uint64_t* dst_x, uint64_t* dst_z,
                      const uint64_t* src_x, const uint64_t* src_z,
                      size_t words);

    const char* name;
};

const RowOps& scalar_ops();

bool avx2_supported();
/// Only valid to invoke when avx2_supported() is true.
const RowOps& avx2_ops();

#if defined(__aarch64__)
const RowOps& neon_ops();
#endif

/// Backend chosen at startup: AVX2 when the CPU supports it (x86-64), NEON on
/// aarch64, scalar otherwise. Env var FLOQUET_SIMD=scalar|avx2|neon forces a
/// specific backend (ignored when unsupported).
const RowOps& active_ops();

}  // namespace floquet::simd
