// search.cpp - exact-ranked grid search, sqrt(2) convergent family, sup walk

#include "sxc/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace sxc {

namespace {

RadixSchedule make_schedule(unsigned m1, unsigned m2,
                            const std::vector<unsigned>& tail) {
    std::vector<mpz_class> tail_z;
    tail_z.reserve(tail.size());
    for (unsigned t : tail) tail_z.emplace_back(t);
    return RadixSchedule::periodic({mpz_class(m1), mpz_class(m2)},
                                   std::move(tail_z));
}

} // namespace

SearchResult grid_search(const SearchSpace& space, unsigned threads) {
    if (space.m1_lo < 2 || space.m2_lo < 2 || space.m1_hi < space.m1_lo ||
        space.m2_hi < space.m2_lo)
        throw domain_error("grid_search: empty or invalid range");
    if (space.tail.empty())
        throw domain_error("grid_search: tail must be nonempty");
    for (unsigned t : space.tail)
        if (t < 2) throw domain_error("grid_search: tail entries must be >= 2");

    const std::size_t n1 = space.m1_hi - space.m1_lo + 1;
    const std::size_t n2 = space.m2_hi - space.m2_lo + 1;
    const std::size_t slots = n1 * n2;

    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = static_cast<unsigned>(
        std::min<std::size_t>(threads, std::max<std::size_t>(slots, 1)));

    // one preassigned slot per candidate; workers never touch shared state
    std::vector<SearchEntry> grid(slots);
    std::vector<char> finite(slots, 0);
    std::vector<char> below(slots, 0);
    const mpq_class infimum_sq(9, 2);  // (SX^2)^2 against 4.5

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const unsigned m1 = space.m1_lo + static_cast<unsigned>(idx / n2);
            const unsigned m2 = space.m2_lo + static_cast<unsigned>(idx % n2);
            PerfectPair pair(make_schedule(m1, m2, space.tail));
            SxValue sx = sx_value(pair);
            if (!sx.finite) continue;
            if (sx.squared * sx.squared < infimum_sq) below[idx] = 1;
            grid[idx] = SearchEntry{m1, m2, space.tail, std::move(sx.squared)};
            finite[idx] = 1;
        }
    };

    if (threads <= 1) {
        work(0, slots);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        const std::size_t chunk = (slots + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = std::min(slots, t * chunk);
            const std::size_t end = std::min(slots, begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    SearchResult result;
    result.entries.reserve(slots);
    for (std::size_t idx = 0; idx < slots; ++idx) {
        if (below[idx]) result.any_below_infimum = true;
        if (finite[idx]) result.entries.push_back(std::move(grid[idx]));
    }
    std::sort(result.entries.begin(), result.entries.end(),
              [](const SearchEntry& a, const SearchEntry& b) {
                  const int c = cmp(a.sx_squared, b.sx_squared);
                  if (c != 0) return c < 0;
                  if (a.m1 != b.m1) return a.m1 < b.m1;
                  return a.m2 < b.m2;
              });
    return result;
}

std::vector<WitnessRow> witness_family(unsigned k_max) {
    if (k_max < 1) throw domain_error("witness_family: k_max must be >= 1");
    std::vector<WitnessRow> rows;
    rows.reserve(k_max);
    // sqrt(2) convergents p/q from 7/5 on: (p, q) <- (p + 2q, p + q)
    mpz_class p = 7, q = 5;
    for (unsigned k = 1; k <= k_max; ++k) {
        RadixSchedule sched = RadixSchedule::periodic({q, p}, {mpz_class(2)});
        PerfectPair pair(std::move(sched));
        SxValue sx = sx_value(pair);
        if (!sx.finite)
            throw domain_error("witness_family: unexpected infinite SX");
        rows.push_back(WitnessRow{k, q, p, std::move(sx.squared)});
        mpz_class np = p + 2 * q;
        q = p + q;
        p = std::move(np);
    }
    return rows;
}

SupWitness sup_witness(double m) {
    if (!(m > 1.0))
        throw domain_error("sup_witness: threshold must be > 1");
    const mpq_class m_exact(m);  // doubles convert exactly
    const mpq_class m_sq = m_exact * m_exact;
    PerfectPair pair(RadixSchedule::parse(";2,3*"));
    for (unsigned s = 1;; ++s) {
        SxTerm t = term(pair, Side::B, s);
        if (t.squared_ratio > m_sq)
            return SupWitness{s, std::move(t.squared_ratio)};
    }
}

} // namespace sxc
