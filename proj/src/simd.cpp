#include "floquet/simd.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace floquet::simd {

namespace {

void xor_rows_scalar(uint64_t* dst, const uint64_t* src, size_t words) {
    for (size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

bool and_parity_scalar(const uint64_t* a, const uint64_t* b, size_t words) {
    // popcount parities add, so folding the AND-words with XOR preserves the
    // total parity.
    uint64_t acc = 0;
    for (size_t i = 0; i < words; ++i) acc ^= a[i] & b[i];
    return std::popcount(acc) & 1u;
}

size_t popcount_and_scalar(const uint64_t* a, const uint64_t* b, size_t words) {
    size_t total = 0;
    for (size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

bool mult_into_scalar(uint64_t* dst_x, uint64_t* dst_z,
                      const uint64_t* src_x, const uint64_t* src_z,
                      size_t words) {
    uint64_t acc = 0;
    for (size_t i = 0; i < words; ++i) {
        acc ^= src_z[i] & dst_x[i];
        dst_x[i] ^= src_x[i];
        dst_z[i] ^= src_z[i];
    }
    return std::popcount(acc) & 1u;
}

#if defined(__aarch64__)

void xor_rows_neon(uint64_t* dst, const uint64_t* src, size_t words) {
    size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(d, s));
    }
    for (; i < words; ++i) dst[i] ^= src[i];
}

bool and_parity_neon(const uint64_t* a, const uint64_t* b, size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    uint64_t folded = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; i < words; ++i) folded ^= a[i] & b[i];
    return std::popcount(folded) & 1u;
}

size_t popcount_and_neon(const uint64_t* a, const uint64_t* b, size_t words) {
    size_t total = 0;
    for (size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

bool mult_into_neon(uint64_t* dst_x, uint64_t* dst_z,
                    const uint64_t* src_x, const uint64_t* src_z,
                    size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint64x2_t dx = vld1q_u64(dst_x + i);
        uint64x2_t dz = vld1q_u64(dst_z + i);
        uint64x2_t sx = vld1q_u64(src_x + i);
        uint64x2_t sz = vld1q_u64(src_z + i);
        acc = veorq_u64(acc, vandq_u64(sz, dx));
        vst1q_u64(dst_x + i, veorq_u64(dx, sx));
        vst1q_u64(dst_z + i, veorq_u64(dz, sz));
    }
    uint64_t folded = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; i < words; ++i) {
        folded ^= src_z[i] & dst_x[i];
        dst_x[i] ^= src_x[i];
        dst_z[i] ^= src_z[i];
    }
    return std::popcount(folded) & 1u;
}

#endif  // __aarch64__

}  // namespace

const RowOps& scalar_ops() {
    static const RowOps ops{xor_rows_scalar, and_parity_scalar,
                            popcount_and_scalar, mult_into_scalar, "scalar"};
    return ops;
}

#if defined(__aarch64__)
const RowOps& neon_ops() {
    static const RowOps ops{xor_rows_neon, and_parity_neon, popcount_and_neon,
                            mult_into_neon, "neon"};
    return ops;
}
#endif

#if !defined(__x86_64__) && !defined(__i386__)
bool avx2_supported() { return false; }
const RowOps& avx2_ops() { return scalar_ops(); }
#endif

const RowOps& active_ops() {
    static const RowOps& chosen = [&]() -> const RowOps& {
        if (const char* force = std::getenv("FLOQUET_SIMD")) {
            if (std::strcmp(force, "scalar") == 0) return scalar_ops();
            if (std::strcmp(force, "avx2") == 0 && avx2_supported())
                return avx2_ops();
#if defined(__aarch64__)
            if (std::strcmp(force, "neon") == 0) return neon_ops();
#endif
        }
#if defined(__aarch64__)
        return neon_ops();
#else
        if (avx2_supported()) return avx2_ops();
        return scalar_ops();
#endif
    }();
    return chosen;
}

}  // namespace floquet::simd
