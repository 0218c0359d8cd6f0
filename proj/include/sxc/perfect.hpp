#pragma once
// perfect.hpp - the complement pair carved out of a mixed-radix schedule
//
// Side A holds the integers whose digits live on even positions (0-based),
// side B those on odd positions; `swapped` interchanges the roles.  Every
// n >= 0 then splits uniquely as a + b by partitioning its digits, which is
// exactly what makes the pair perfect.  Counting is done by a single
// digit-DP pass so it stays exact far beyond enumerable ranges (record
// points grow doubly exponentially); enumeration exists as a lazy ascending
// stream for verification and small horizons.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "sxc/schedule.hpp"

namespace sxc {

enum class Side { A, B };

constexpr Side other_side(Side s) { return s == Side::A ? Side::B : Side::A; }
constexpr char side_name(Side s) { return s == Side::A ? 'A' : 'B'; }

class PerfectPair;

// lazy ascending stream of one side's members that are <= limit
class MemberStream {
public:
    MemberStream(const PerfectPair& pair, Side side, mpz_class limit);

    // next member, or nullopt once past the limit (or a finite schedule
    // runs out of positions)
    std::optional<mpz_class> next();

private:
    bool advance();
    bool ensure_position(std::size_t idx);

    const RadixSchedule sched_;
    unsigned parity_;
    mpz_class limit_;
    std::vector<mpz_class> digits_;    // digit per allowed position
    std::vector<mpz_class> weights_;   // weight per allowed position
    std::vector<mpz_class> radices_;   // radix per allowed position
    mpz_class value_;
    bool exhausted_ = false;
    bool started_ = false;
};

class PerfectPair {
public:
    explicit PerfectPair(RadixSchedule sched, bool swapped = false)
        : sched_(std::move(sched)), swapped_(swapped) {}

    const RadixSchedule& schedule() const { return sched_; }
    bool swapped() const { return swapped_; }

    // digit parity (0 = even positions) a side occupies
    unsigned digit_parity(Side side) const {
        return (side == Side::A) == !swapped_ ? 0u : 1u;
    }

    // membership: all digits on the opposite parity are zero
    bool contains(Side side, const mpz_class& n) const;

    // counting function |{ members <= x }| by digit DP, O(#digits) bigint ops
    mpz_class count(Side side, const mpz_class& x) const;

    // s-th record point (s >= 1): side A sums (m_{2i-1}-1) W_{2i-2},
    // side B sums (m_{2i}-1) W_{2i-1}; the point is itself a member
    mpz_class record_point(Side side, unsigned s) const;

    // number of members the side has in total on a finite schedule
    bool side_exhaustible(Side side) const { return sched_.is_finite(); }

    MemberStream members(Side side, mpz_class limit) const {
        return MemberStream(*this, side, std::move(limit));
    }

private:
    RadixSchedule sched_;
    bool swapped_;
};

// materialized ascending members <= limit
std::vector<mpz_class> enumerate_members(const PerfectPair& pair, Side side,
                                         const mpz_class& limit);

// members <= limit as uint64 (limit must fit); used by the verify module
std::vector<std::uint64_t> enumerate_members_u64(const PerfectPair& pair,
                                                 Side side,
                                                 std::uint64_t limit);

} // namespace sxc
