// sx.cpp - record terms, tail-limit classification, chain inequalities
//
// Tail-limit derivation used by tail_class: fix a side with digit parity rho
// and a record index s0 deep enough that every position from the s0-th
// record position onward lies in the periodic tail, with s0 in the requested
// phase class.  Over one effective window of T' = 2h positions the count
// multiplies by P and the weight by R, so with G the window's weighted digit
// sum,
//   x_{s0+nh} = x_{s0} + W * G * (R^n - 1)/(R - 1),   u_{s0+nh} = u_{s0} P^n
// (W = weight of the s0-th record position).  The squared ratio u^2/x then
// converges iff P^2 = R, with limit u_{s0}^2 (R-1) / (W * G); P^2 < R sends
// it to zero and P^2 > R to infinity.

#include "sxc/sx.hpp"

#include <utility>

namespace sxc {

const char* growth_name(TailGrowth g) {
    switch (g) {
        case TailGrowth::zero: return "zero";
        case TailGrowth::finite: return "finite";
        case TailGrowth::infinite: return "infinite";
    }
    return "?";
}

SxTerm term(const PerfectPair& pair, Side side, unsigned s) {
    if (s < 1) throw domain_error("term: s must be >= 1");
    const RadixSchedule& sched = pair.schedule();
    const unsigned parity = pair.digit_parity(side);
    mpz_class point = pair.record_point(side, s);
    mpz_class count = 1;
    for (std::size_t i = 1; i <= s; ++i)
        count *= sched.radix(2 * i - 1 + parity);
    mpq_class squared(count * count, point);
    squared.canonicalize();
    return SxTerm{side, s, std::move(point), std::move(count),
                  std::move(squared)};
}

std::size_t tail_phase_count(const RadixSchedule& sched) {
    if (sched.is_finite())
        throw finite_schedule_error(
            "tail analysis needs a periodic tail; schedule " +
            sched.to_string() + " is finite");
    const std::size_t t = sched.tail_size();
    return t % 2 == 0 ? t / 2 : t;  // half the effective (even) period
}

TailClass tail_class(const PerfectPair& pair, Side side, std::size_t phase) {
    const RadixSchedule& sched = pair.schedule();
    const std::size_t h = tail_phase_count(sched);
    if (phase >= h) throw domain_error("tail_class: phase out of range");
    const unsigned parity = pair.digit_parity(side);

    // smallest record index whose own position 2s-2+parity is already in
    // the tail, lifted into the requested phase class
    std::size_t s0 = (sched.prefix_size() + 3 - parity) / 2;  // ceil((t0+2-rho)/2)
    if (s0 < 1) s0 = 1;
    while (s0 % h != phase) ++s0;

    // window of T' = 2h radices starting at 1-based index 2*s0-1+parity
    const std::size_t w0 = 2 * s0 - 1 + parity;
    mpz_class r_all = 1;
    for (std::size_t j = 0; j < 2 * h; ++j) r_all *= sched.radix(w0 + j);
    mpz_class p_side = 1;
    for (std::size_t l = 1; l <= h; ++l)
        p_side *= sched.radix(2 * (s0 + l) - 1 + parity);

    TailClass out;
    out.side = side;
    out.phase = phase;
    mpz_class p2 = p_side * p_side;
    if (p2 < r_all) {
        out.growth = TailGrowth::zero;
        return out;
    }
    if (p2 > r_all) {
        out.growth = TailGrowth::infinite;
        return out;
    }

    // finite: limit = u_{s0}^2 (R-1) / (W_{2s0-2+parity} * G) where
    // G = sum over the window's own-side digits of (m-1) * (weight ratio)
    mpz_class g = 0;
    mpz_class omega = 1;
    for (std::size_t l = 1; l <= h; ++l) {
        omega *= sched.radix(w0 + 2 * l - 2) * sched.radix(w0 + 2 * l - 1);
        g += (sched.radix(2 * (s0 + l) - 1 + parity) - 1) * omega;
    }
    mpz_class u = 1;
    for (std::size_t i = 1; i <= s0; ++i) u *= sched.radix(2 * i - 1 + parity);
    mpq_class limit(u * u * (r_all - 1), sched.weight(2 * s0 - 2 + parity) * g);
    limit.canonicalize();
    out.growth = TailGrowth::finite;
    out.limit = std::move(limit);
    return out;
}

SxValue sx_value(const PerfectPair& pair) {
    const std::size_t h = tail_phase_count(pair.schedule());
    SxValue out;
    out.finite = true;
    bool any_finite = false;
    bool any_infinite = false;
    for (Side side : {Side::A, Side::B}) {
        for (std::size_t phase = 0; phase < h; ++phase) {
            TailClass c = tail_class(pair, side, phase);
            if (c.growth == TailGrowth::infinite) {
                any_infinite = true;
            } else if (c.growth == TailGrowth::finite) {
                if (!any_finite || c.limit > out.squared)
                    out.squared = c.limit;
                any_finite = true;
            }
            out.classes.push_back(std::move(c));
        }
    }
    if (any_infinite) {
        out.finite = false;
        out.squared = 0;
    } else if (!any_finite) {
        // P_A * P_B = R makes a perfect pair's classes never all-zero;
        // reaching this means the classifier itself broke
        throw domain_error("sx_value: all record classes vanish - "
                           "inconsistent classification for a perfect pair");
    }
    return out;
}

namespace {

struct ChainContext {
    const PerfectPair& pair;
    Side side;
    unsigned parity;
    const mpz_class& n;
    unsigned j;
    mpz_class step;  // W at the locked position
    std::vector<ChainViolation>& out;
};

void chain_candidate(ChainContext& ctx, const mpz_class& y) {
    mpz_class after = y + ctx.step;
    mpz_class c = ctx.pair.count(ctx.side, y);
    mpz_class c2 = ctx.pair.count(ctx.side, after);
    if (c * c * after > c2 * c2 * y)
        ctx.out.push_back(ChainViolation{ctx.side, ctx.j, y, ctx.step, c, c2});
}

// place digit delta_i at 0-based position 2i+parity; the first level (i = j)
// caps at m-2 so the +step increment never carries, the last placed digit
// must be >= 1, digits in between are free
void chain_dfs(ChainContext& ctx, std::size_t i, const mpz_class& v) {
    const RadixSchedule& sched = ctx.pair.schedule();
    const std::size_t pos = 2 * i + ctx.parity;
    if (sched.is_finite() && pos >= sched.prefix_size()) return;
    const mpz_class w = sched.weight(pos);
    // every point below here adds at least w somewhere at or above this level
    if (v + w > ctx.n) return;
    mpz_class cap = sched.radix(pos + 1) - (i == ctx.j ? 2 : 1);
    mpz_class value = v;
    for (mpz_class delta = 0; delta <= cap; ++delta, value += w) {
        if (value > ctx.n) break;
        if (delta > 0) chain_candidate(ctx, value);
        chain_dfs(ctx, i + 1, value);
    }
}

void chain_side(const PerfectPair& pair, Side side, const mpz_class& n,
                std::vector<ChainViolation>& out) {
    const RadixSchedule& sched = pair.schedule();
    const unsigned parity = pair.digit_parity(side);
    for (unsigned j = 1;; ++j) {
        const std::size_t locked = 2 * static_cast<std::size_t>(j) + parity;
        // the first free digit sits at the locked position; it must exist
        if (sched.is_finite() && locked >= sched.prefix_size()) break;
        mpz_class base = pair.record_point(side, j);
        mpz_class step = sched.weight(locked);
        if (base + step > n) break;  // minimal candidate for this j (and up)
        ChainContext ctx{pair, side, parity, n, j, std::move(step), out};
        chain_dfs(ctx, j, base);
    }
}

} // namespace

std::vector<ChainViolation> chain_check(const PerfectPair& pair,
                                        const mpz_class& n) {
    if (n < 1) throw domain_error("chain_check: n must be >= 1");
    std::vector<ChainViolation> out;
    chain_side(pair, Side::A, n, out);
    chain_side(pair, Side::B, n, out);
    return out;
}

std::vector<SeriesEntry> ratio_series(const PerfectPair& pair, Side side,
                                      const mpz_class& n) {
    if (n < 1) throw domain_error("ratio_series: n must be >= 1");
    std::vector<SeriesEntry> out;
    MemberStream stream = pair.members(side, n);
    mpz_class count = 0;
    while (auto m = stream.next()) {
        ++count;
        if (*m < 1) continue;  // 0 is a member but not a sample point
        mpq_class squared(count * count, *m);
        squared.canonicalize();
        out.push_back(SeriesEntry{std::move(*m), count, std::move(squared)});
    }
    return out;
}

} // namespace sxc
