// perfect.cpp - membership, digit-DP counting, record points, member streams

#include "sxc/perfect.hpp"

#include <sstream>

namespace sxc {

bool PerfectPair::contains(Side side, const mpz_class& n) const {
    if (n < 0) throw domain_error("contains: negative value");
    if (sched_.is_finite()) {
        // values past the finite range cannot be members of either side
        if (n >= sched_.weight(sched_.prefix_size())) return false;
    }
    const unsigned parity = digit_parity(side);
    DigitVector digits = sched_.to_digits(n);
    for (std::size_t p = 0; p < digits.size(); ++p)
        if (p % 2 != parity && digits[p] != 0) return false;
    return true;
}

// Count members <= x in one most-significant-first pass over the digits of
// x.  At each position p the members that agree with x above p and take a
// smaller digit at p are counted as (choices below e_p) * (free completions
// under p); "free completions" is the product of the allowed radices below
// p.  Positions of the opposite parity allow only digit 0, so a nonzero
// digit of x there ends the walk: no member matches the prefix any further.
mpz_class PerfectPair::count(Side side, const mpz_class& x) const {
    if (x < 0) throw domain_error("count: negative horizon");
    mpz_class cap = x;
    if (sched_.is_finite()) {
        // every member is < W_P; counting at or past that sees the full side
        mpz_class top = sched_.weight(sched_.prefix_size()) - 1;
        if (cap > top) cap = top;
    }
    const unsigned parity = digit_parity(side);
    DigitVector digits = sched_.to_digits(cap);

    // completions[p] = number of digit assignments to allowed positions < p
    std::vector<mpz_class> completions(digits.size() + 1);
    completions[0] = 1;
    for (std::size_t p = 0; p < digits.size(); ++p) {
        completions[p + 1] = completions[p];
        if (p % 2 == parity) completions[p + 1] *= sched_.radix(p + 1);
    }

    mpz_class total = 0;
    for (std::size_t p = digits.size(); p-- > 0;) {
        if (p % 2 == parity) {
            total += digits[p] * completions[p];
        } else if (digits[p] != 0) {
            // only digit 0 is allowed here; prefix match stops
            return total + completions[p];
        }
    }
    return total + 1;  // cap itself is a member when the walk completes
}

mpz_class PerfectPair::record_point(Side side, unsigned s) const {
    if (s < 1) throw domain_error("record_point: s must be >= 1");
    const unsigned parity = digit_parity(side);
    // A-side records use radices m_1, m_3, ..., m_{2s-1}; B-side m_2, ..., m_{2s}
    const std::size_t last_pos = 2 * static_cast<std::size_t>(s) - 1 + parity;
    if (sched_.is_finite() && last_pos > sched_.prefix_size()) {
        std::ostringstream os;
        os << "record_point: s = " << s << " needs radix m_" << last_pos
           << " past finite schedule " << sched_.to_string();
        throw domain_error(os.str());
    }
    mpz_class point = 0;
    mpz_class w = 1;  // W_{i-1} entering iteration i
    for (std::size_t i = 1; i <= last_pos; ++i) {
        const mpz_class& m = sched_.radix(i);
        if (i % 2 != parity)  // i = 2j-1+parity for some j: a record digit
            point += (m - 1) * w;
        w *= m;
    }
    return point;
}

MemberStream::MemberStream(const PerfectPair& pair, Side side, mpz_class limit)
    : sched_(pair.schedule()),
      parity_(pair.digit_parity(side)),
      limit_(std::move(limit)),
      value_(0) {}

bool MemberStream::ensure_position(std::size_t idx) {
    while (radices_.size() <= idx) {
        std::size_t pos = 2 * radices_.size() + parity_;  // 0-based digit position
        if (sched_.is_finite() && pos >= sched_.prefix_size()) return false;
        weights_.push_back(sched_.weight(pos));
        radices_.push_back(sched_.radix(pos + 1));
        digits_.push_back(0);
    }
    return true;
}

bool MemberStream::advance() {
    for (std::size_t idx = 0;; ++idx) {
        if (!ensure_position(idx)) return false;  // finite side exhausted
        ++digits_[idx];
        value_ += weights_[idx];
        if (digits_[idx] < radices_[idx]) return true;
        value_ -= radices_[idx] * weights_[idx];
        digits_[idx] = 0;
    }
}

std::optional<mpz_class> MemberStream::next() {
    if (exhausted_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (limit_ < 0) { exhausted_ = true; return std::nullopt; }
        return value_;  // 0 is always a member
    }
    if (!advance() || value_ > limit_) {
        exhausted_ = true;
        return std::nullopt;
    }
    return value_;
}

std::vector<mpz_class> enumerate_members(const PerfectPair& pair, Side side,
                                         const mpz_class& limit) {
    std::vector<mpz_class> out;
    MemberStream stream = pair.members(side, limit);
    while (auto m = stream.next()) out.push_back(std::move(*m));
    return out;
}

std::vector<std::uint64_t> enumerate_members_u64(const PerfectPair& pair,
                                                 Side side,
                                                 std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    MemberStream stream = pair.members(side, mpz_class(static_cast<unsigned long>(limit)));
    while (auto m = stream.next()) out.push_back(mpz_get_ui(m->get_mpz_t()));
    return out;
}

} // namespace sxc
