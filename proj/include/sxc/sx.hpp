#pragma once
// sx.hpp - the SX statistic: record terms, tail limits, chain inequalities
//
// SX(A,B)^2 is the limsup of max{A(x),B(x)}^2/x, and for these pairs the
// limsup is attained along the record points, so everything here is exact
// rational arithmetic on the squared ratios u_s^2/x_s.  Record sequences are
// classified per side and per tail phase (zero / finite limit / infinite);
// SX^2 is the max of the finite limits, infinite when any class diverges.
// Square roots appear only when a caller renders decimals.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "sxc/perfect.hpp"
#include "sxc/schedule.hpp"

namespace sxc {

enum class TailGrowth { zero, finite, infinite };

const char* growth_name(TailGrowth g);

// s-th record term of one side: point x_s, count u_s, squared ratio u_s^2/x_s
struct SxTerm {
    Side side;
    unsigned s;
    mpz_class point;
    mpz_class count;
    mpq_class squared_ratio;
};

// limit behaviour of one side's record ratios along one phase class
struct TailClass {
    Side side;
    std::size_t phase;     // s % phase_count of the records in this class
    TailGrowth growth;
    mpq_class limit;       // squared-ratio limit; meaningful iff finite
};

struct SxValue {
    bool finite;
    mpq_class squared;              // SX^2; meaningful iff finite
    std::vector<TailClass> classes; // both sides, all phases
};

// one ratio-series sample: a member x with its count and count^2/x
struct SeriesEntry {
    mpz_class x;
    mpz_class count;
    mpq_class squared_ratio;
};

// a failed chain inequality: count(y)^2 (y+step) > count(y+step)^2 y
struct ChainViolation {
    Side side;
    unsigned j;            // locked record prefix length
    mpz_class y;
    mpz_class step;        // W_{2j} resp. W_{2j+1}
    mpz_class count_at;    // count(side, y)
    mpz_class count_after; // count(side, y+step)
};

// exact s-th record term; throws sxc::domain_error when s = 0 or a finite
// schedule has no s-th record
SxTerm term(const PerfectPair& pair, Side side, unsigned s);

// number of record-phase classes: half the effective tail period (an odd
// period is doubled so the window covers both digit parities); throws
// sxc::finite_schedule_error on finite schedules
std::size_t tail_phase_count(const RadixSchedule& sched);

// classification of one side's records along one phase class.  Over a full
// window the count multiplies by P (the side's radices in the window) and
// the point by R (all radices in the window): P^2 < R gives zero, P^2 > R
// infinite, P^2 = R a finite limit computed from the geometric closed form.
TailClass tail_class(const PerfectPair& pair, Side side, std::size_t phase);

// SX of the pair: max of the finite per-side per-phase limits, or infinite.
// Throws sxc::finite_schedule_error on finite schedules and
// sxc::domain_error if every class comes back zero (impossible for a
// perfect pair, where P_A * P_B = R; reported rather than trusted).
SxValue sx_value(const PerfectPair& pair);

// exhaustive check of the chain inequalities for all points <= n of the
// record-prefix-plus-sparse-digits form on both sides; returns violations
// (expected empty)
std::vector<ChainViolation> chain_check(const PerfectPair& pair,
                                        const mpz_class& n);

// (x, count(x), count(x)^2/x) at every member x of the side, 1 <= x <= n
std::vector<SeriesEntry> ratio_series(const PerfectPair& pair, Side side,
                                      const mpz_class& n);

} // namespace sxc
