#pragma once
// kernels.hpp - word-parallel inner loops for representation counting
//
// Representation counts r(n) = |{(a,b) : a+b = n}| are accumulated in
// bit-sliced form: K planes of 64-bit words, plane p holding bit p of every
// slot's counter.  Adding the indicator bitset of (B + a) into the counters
// is a ripple-carry add across planes:
//
//     carry = src
//     for p = 0..K-1: t = plane[p] & carry; plane[p] ^= carry; carry = t
//
// which is pure AND/XOR over long word arrays - the data-parallel core of
// the verify module.  Two further primitives feed and drain it: extracting
// a bit-window of B at an arbitrary bit offset (funnel shift), and
// plane-wise reductions used for min/max/zero/multi scans.
//
// Each primitive has a scalar reference implementation and an AVX2 variant;
// the active set is chosen once at runtime from CPU capabilities and can be
// overridden with SXC_KERNEL=scalar|avx2 (tests run both and require
// bit-identical results).

#include <cstddef>
#include <cstdint>

namespace sxc::kern {

struct Ops {
    const char* name;

    // dst[0..n) = 64-bit words of src starting at bit offset `bit_off`;
    // reads src[0..src_words), treats bits past the end as zero
    void (*extract_window)(std::uint64_t* dst, std::size_t n,
                           const std::uint64_t* src, std::size_t src_words,
                           std::uint64_t bit_off);

    // ripple-add the 0/1 vector src into planes[0..k); returns the OR of
    // carry-out words (nonzero means counter overflow past plane k-1)
    std::uint64_t (*counter_add)(std::uint64_t* const* planes, unsigned k,
                                 const std::uint64_t* src, std::size_t n);

    // accumulate pairwise OR/AND=~ helpers used by the report reducers
    // acc |= a  over n words
    void (*or_into)(std::uint64_t* acc, const std::uint64_t* a, std::size_t n);
};

// reference implementations (always available)
const Ops& scalar_ops();

// AVX2 implementations, or nullptr when unsupported by compiler or CPU
const Ops* avx2_ops();

// the dispatched set: AVX2 when the CPU has it, unless SXC_KERNEL overrides
const Ops& ops();

// force a specific set (tests); pass nullptr to restore automatic choice
void override_ops(const Ops* forced);

} // namespace sxc::kern
