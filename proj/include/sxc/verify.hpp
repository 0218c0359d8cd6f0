#pragma once
// verify.hpp - brute-force checks of the complement definitions
//
// Everything here is finite-horizon: representation counts r(n) over
// [0, N], perfectness (r == 1 everywhere), complement thresholds, and the
// two ratio statistics.  Counts are exact; the convolution runs on the
// bit-sliced kernels from kernels.hpp, streamed over output blocks so a
// 10^8 horizon stays memory-flat.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "sxc/perfect.hpp"

namespace sxc {

// strictly increasing nonnegative integers
struct SetData {
    std::vector<std::uint64_t> elements;
};

// validates monotonicity; throws sxc::domain_error otherwise
SetData make_set(std::vector<std::uint64_t> elements);

// one decimal integer per line, '#' comment lines ignored, LF or CRLF
SetData load_set(const std::filesystem::path& path);

struct RepReport {
    std::uint64_t horizon = 0;           // N
    std::uint64_t min_count = 0;         // over n in [0, N]
    std::uint64_t max_count = 0;
    std::optional<std::uint64_t> first_zero;   // smallest unrepresentable n
    std::optional<std::uint64_t> first_multi;  // smallest n with r(n) >= 2
    std::optional<std::uint64_t> threshold;    // smallest n0 with no gaps in [n0, N]

    bool perfect() const { return min_count == 1 && max_count == 1; }
};

// exact r[0..N]; materializes the whole sequence - intended for horizons
// that fit in memory (the report functions below stream instead)
std::vector<std::uint64_t> representation_counts(const SetData& a,
                                                 const SetData& b,
                                                 std::uint64_t n);

// streaming summary of r over [0, N]
RepReport rep_report(const SetData& a, const SetData& b, std::uint64_t n);

// materializes both sides of the pair to N and expects r == 1 throughout
RepReport check_perfect(const PerfectPair& pair, std::uint64_t n);

// general complement check for user-supplied sets
RepReport check_complement(const SetData& a, const SetData& b, std::uint64_t n);

struct RatioStats {
    mpq_class max_product_ratio;      // max over 1<=x<=N of A(x)B(x)/x
    std::uint64_t product_argmax = 0;
    mpq_class max_count_ratio_sq;     // max of max{A(x),B(x)}^2 / x
    std::uint64_t count_argmax = 0;
    mpz_class min_product_slack;      // min of A(x)B(x) - x  (empirical -c1)
    std::uint64_t slack_argmin = 0;
};

// exact scan over [1, N]; maxima move only where A(x) or B(x) increments
RatioStats ratio_stats(const SetData& a, const SetData& b, std::uint64_t n);

} // namespace sxc
