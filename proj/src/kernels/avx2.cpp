// avx2.cpp - 256-bit variants of the counting kernels
//
// Compiled with -mavx2 and reached only through the dispatcher after a
// runtime CPU check, so the rest of the library builds without AVX2.

#include "sxc/kernels.hpp"

#include <algorithm>

#if defined(SXC_HAVE_AVX2)

#include <immintrin.h>

namespace sxc::kern {

namespace {

void extract_window_avx2(std::uint64_t* dst, std::size_t n,
                         const std::uint64_t* src, std::size_t src_words,
                         std::uint64_t bit_off) {
    const std::size_t w = static_cast<std::size_t>(bit_off >> 6);
    const unsigned r = static_cast<unsigned>(bit_off & 63);

    // interior: all loads in range; unaligned 256-bit loads of src[w+i..]
    std::size_t i = 0;
    if (r == 0) {
        if (w < src_words) {
            std::size_t full = std::min(n, src_words - w);
            for (; i + 4 <= full; i += 4) {
                __m256i v = _mm256_loadu_si256(
                    reinterpret_cast<const __m256i*>(src + w + i));
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
            }
            for (; i < full; ++i) dst[i] = src[w + i];
        }
        for (; i < n; ++i) dst[i] = 0;
        return;
    }

    const __m256i shr = _mm256_set1_epi64x(r);
    const __m256i shl = _mm256_set1_epi64x(64 - r);
    if (w < src_words) {
        // need src[w+i+4] in range for the high part: i+4 <= src_words-w-1
        std::size_t full = src_words - w;
        std::size_t vec_end = full > 4 ? std::min(n, full - 4) : 0;
        for (; i + 4 <= vec_end; i += 4) {
            __m256i lo = _mm256_loadu_si256(
                reinterpret_cast<const __m256i*>(src + w + i));
            __m256i hi = _mm256_loadu_si256(
                reinterpret_cast<const __m256i*>(src + w + i + 1));
            __m256i v = _mm256_or_si256(_mm256_srlv_epi64(lo, shr),
                                        _mm256_sllv_epi64(hi, shl));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
        }
    }
    auto word = [&](std::size_t j) -> std::uint64_t {
        return j < src_words ? src[j] : 0;
    };
    for (; i < n; ++i)
        dst[i] = (word(w + i) >> r) | (word(w + i + 1) << (64 - r));
}

std::uint64_t counter_add_avx2(std::uint64_t* const* planes, unsigned k,
                               const std::uint64_t* src, std::size_t n) {
    __m256i overflow = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i carry =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        unsigned p = 0;
        for (; p < k; ++p) {
            if (_mm256_testz_si256(carry, carry)) break;
            __m256i* slot = reinterpret_cast<__m256i*>(planes[p] + i);
            __m256i plane = _mm256_loadu_si256(slot);
            __m256i t = _mm256_and_si256(plane, carry);
            _mm256_storeu_si256(slot, _mm256_xor_si256(plane, carry));
            carry = t;
        }
        if (p == k) overflow = _mm256_or_si256(overflow, carry);
    }
    std::uint64_t tail_overflow = 0;
    for (; i < n; ++i) {
        std::uint64_t carry = src[i];
        for (unsigned p = 0; p < k && carry; ++p) {
            std::uint64_t t = planes[p][i] & carry;
            planes[p][i] ^= carry;
            carry = t;
        }
        tail_overflow |= carry;
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), overflow);
    return lanes[0] | lanes[1] | lanes[2] | lanes[3] | tail_overflow;
}

void or_into_avx2(std::uint64_t* acc, const std::uint64_t* a, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i* slot = reinterpret_cast<__m256i*>(acc + i);
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        _mm256_storeu_si256(slot, _mm256_or_si256(_mm256_loadu_si256(slot), v));
    }
    for (; i < n; ++i) acc[i] |= a[i];
}

bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

} // namespace

const Ops* avx2_ops() {
    static const bool supported = cpu_has_avx2();
    if (!supported) return nullptr;
    static const Ops ops{"avx2", extract_window_avx2, counter_add_avx2,
                         or_into_avx2};
    return &ops;
}

} // namespace sxc::kern

#else

namespace sxc::kern {
const Ops* avx2_ops() { return nullptr; }
} // namespace sxc::kern

#endif
