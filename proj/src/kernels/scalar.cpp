// scalar.cpp - reference kernels; the baseline every variant must match

#include "sxc/kernels.hpp"

namespace sxc::kern {

namespace {

void extract_window_scalar(std::uint64_t* dst, std::size_t n,
                           const std::uint64_t* src, std::size_t src_words,
                           std::uint64_t bit_off) {
    const std::size_t w = static_cast<std::size_t>(bit_off >> 6);
    const unsigned r = static_cast<unsigned>(bit_off & 63);
    auto word = [&](std::size_t i) -> std::uint64_t {
        return i < src_words ? src[i] : 0;
    };
    if (r == 0) {
        for (std::size_t i = 0; i < n; ++i) dst[i] = word(w + i);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            dst[i] = (word(w + i) >> r) | (word(w + i + 1) << (64 - r));
    }
}

std::uint64_t counter_add_scalar(std::uint64_t* const* planes, unsigned k,
                                 const std::uint64_t* src, std::size_t n) {
    std::uint64_t overflow = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t carry = src[i];
        for (unsigned p = 0; p < k && carry; ++p) {
            std::uint64_t t = planes[p][i] & carry;
            planes[p][i] ^= carry;
            carry = t;
        }
        overflow |= carry;
    }
    return overflow;
}

void or_into_scalar(std::uint64_t* acc, const std::uint64_t* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] |= a[i];
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", extract_window_scalar, counter_add_scalar,
                         or_into_scalar};
    return ops;
}

} // namespace sxc::kern
