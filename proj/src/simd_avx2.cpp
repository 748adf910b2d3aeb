// AVX2 variants of the bit-row kernels. Compiled with per-function target
// attributes so the rest of the build stays baseline-ISA; callers must gate on
// avx2_supported() before using avx2_ops().

#include "floquet/simd.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <bit>

namespace floquet::simd {

namespace {

__attribute__((target("avx2"))) void xor_rows_avx2(uint64_t* dst,
                                                   const uint64_t* src,
                                                   size_t words) {
    size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_xor_si256(d, s));
    }
    for (; i < words; ++i) dst[i] ^= src[i];
}

__attribute__((target("avx2"))) bool and_parity_avx2(const uint64_t* a,
                                                     const uint64_t* b,
                                                     size_t words) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_xor_si256(acc, _mm256_and_si256(va, vb));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint64_t folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; i < words; ++i) folded ^= a[i] & b[i];
    return std::popcount(folded) & 1u;
}

__attribute__((target("avx2"))) size_t popcount_and_avx2(const uint64_t* a,
                                                         const uint64_t* b,
                                                         size_t words) {
    size_t total = 0;
    size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        alignas(32) uint64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes),
                           _mm256_and_si256(va, vb));
        total += std::popcount(lanes[0]) + std::popcount(lanes[1]) +
                 std::popcount(lanes[2]) + std::popcount(lanes[3]);
    }
    for (; i < words; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

__attribute__((target("avx2"))) bool mult_into_avx2(uint64_t* dst_x,
                                                    uint64_t* dst_z,
                                                    const uint64_t* src_x,
                                                    const uint64_t* src_z,
                                                    size_t words) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i dx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst_x + i));
        __m256i dz = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst_z + i));
        __m256i sx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src_x + i));
        __m256i sz = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src_z + i));
        acc = _mm256_xor_si256(acc, _mm256_and_si256(sz, dx));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst_x + i),
                            _mm256_xor_si256(dx, sx));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst_z + i),
                            _mm256_xor_si256(dz, sz));
    }
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint64_t folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; i < words; ++i) {
        folded ^= src_z[i] & dst_x[i];
        dst_x[i] ^= src_x[i];
        dst_z[i] ^= src_z[i];
    }
    return std::popcount(folded) & 1u;
}

}  // namespace

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

const RowOps& avx2_ops() {
    static const RowOps ops{xor_rows_avx2, and_parity_avx2, popcount_and_avx2,
                            mult_into_avx2, "avx2"};
    return ops;
}

}  // namespace floquet::simd

#endif  // x86
