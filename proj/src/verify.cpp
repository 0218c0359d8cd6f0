// verify.cpp - representation counts, perfect/complement reports, ratio scans
//
// The convolution r = sum_{a in A} indicator(B + a) is evaluated block by
// block over the output range.  B is materialized once as a bitset with a
// zero block prepended, so every per-a contribution to a block is a single
// window extraction at a nonnegative bit offset followed by a bit-sliced
// counter add.  K = bit_width(min(|A|,|B|)) planes make overflow impossible.

#include "sxc/verify.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <fstream>
#include <sstream>

#include "sxc/kernels.hpp"

namespace sxc {

namespace {

constexpr std::uint64_t BLOCK_BITS = 1u << 22;
constexpr std::size_t BLOCK_WORDS = BLOCK_BITS / 64;

std::uint64_t count_at_most(const std::vector<std::uint64_t>& sorted,
                            std::uint64_t x) {
    return static_cast<std::uint64_t>(
        std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
}

struct Convolver {
    const std::vector<std::uint64_t>& a;
    std::uint64_t n;                    // horizon: slots are [0, n]
    std::vector<std::uint64_t> b_bits;  // BLOCK_WORDS zero words, then B's bits
    unsigned k = 1;                     // planes

    Convolver(const SetData& as, const SetData& bs, std::uint64_t horizon)
        : a(as.elements), n(horizon) {
        const std::size_t b_words = static_cast<std::size_t>(n / 64 + 1);
        b_bits.assign(BLOCK_WORDS + b_words, 0);
        std::uint64_t nb = 0;
        for (std::uint64_t b : bs.elements) {
            if (b > n) break;
            b_bits[BLOCK_WORDS + (b >> 6)] |= std::uint64_t{1} << (b & 63);
            ++nb;
        }
        std::uint64_t na = count_at_most(a, n);
        std::uint64_t max_count = std::min(na, nb);
        k = std::max(1u, static_cast<unsigned>(std::bit_width(max_count)));
    }

    // visit(lo, valid_bits, planes): counters for slots [lo, lo+valid_bits)
    template <typename Visit>
    void run(Visit&& visit) const {
        const kern::Ops& K = kern::ops();
        std::vector<std::vector<std::uint64_t>> planes(
            k, std::vector<std::uint64_t>(BLOCK_WORDS));
        std::vector<std::uint64_t*> plane_ptrs(k);
        for (unsigned p = 0; p < k; ++p) plane_ptrs[p] = planes[p].data();
        std::vector<std::uint64_t> window(BLOCK_WORDS);

        for (std::uint64_t lo = 0; lo <= n; lo += BLOCK_BITS) {
            const std::uint64_t hi = std::min(n + 1, lo + BLOCK_BITS);
            const std::uint64_t valid_bits = hi - lo;
            const std::size_t nwords =
                static_cast<std::size_t>((valid_bits + 63) / 64);
            for (auto& plane : planes)
                std::fill(plane.begin(), plane.begin() + nwords, 0);

            for (std::uint64_t av : a) {
                if (av >= hi) break;  // ascending; later members miss the block
                // bits of (B + av) over [lo, hi) live at offset lo - av in the
                // padded buffer (always >= 0 thanks to the zero block)
                const std::uint64_t off = BLOCK_BITS + lo - av;
                K.extract_window(window.data(), nwords, b_bits.data(),
                                 b_bits.size(), off);
                std::uint64_t overflow = K.counter_add(plane_ptrs.data(), k,
                                                       window.data(), nwords);
                assert(overflow == 0);
                (void)overflow;
            }
            visit(lo, valid_bits, planes);
        }
    }
};

std::uint64_t word_mask(std::uint64_t bits) {
    return bits >= 64 ? ~std::uint64_t{0}
                      : ((std::uint64_t{1} << bits) - 1);
}

// bit-sliced max over valid slots of a block
std::uint64_t block_max(const std::vector<std::vector<std::uint64_t>>& planes,
                        std::size_t nwords, std::uint64_t valid_bits) {
    std::vector<std::uint64_t> mask(nwords, ~std::uint64_t{0});
    mask[nwords - 1] = word_mask(valid_bits - 64 * (nwords - 1));
    std::uint64_t value = 0;
    for (std::size_t p = planes.size(); p-- > 0;) {
        bool any = false;
        for (std::size_t i = 0; i < nwords; ++i)
            if (mask[i] & planes[p][i]) { any = true; break; }
        if (!any) continue;
        value |= std::uint64_t{1} << p;
        for (std::size_t i = 0; i < nwords; ++i) mask[i] &= planes[p][i];
    }
    return value;
}

// bit-sliced min over valid slots of a block
std::uint64_t block_min(const std::vector<std::vector<std::uint64_t>>& planes,
                        std::size_t nwords, std::uint64_t valid_bits) {
    std::vector<std::uint64_t> mask(nwords, ~std::uint64_t{0});
    mask[nwords - 1] = word_mask(valid_bits - 64 * (nwords - 1));
    std::uint64_t value = 0;
    for (std::size_t p = planes.size(); p-- > 0;) {
        bool any = false;
        std::uint64_t keep = 0;
        for (std::size_t i = 0; i < nwords; ++i) {
            keep = mask[i] & ~planes[p][i];
            if (keep) { any = true; break; }
        }
        if (any) {
            for (std::size_t i = 0; i < nwords; ++i) mask[i] &= ~planes[p][i];
        } else {
            value |= std::uint64_t{1} << p;
        }
    }
    return value;
}

} // namespace

SetData make_set(std::vector<std::uint64_t> elements) {
    for (std::size_t i = 1; i < elements.size(); ++i)
        if (elements[i] <= elements[i - 1])
            throw domain_error("set elements must be strictly increasing");
    return SetData{std::move(elements)};
}

SetData load_set(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open set file: " + path.string());
    std::vector<std::uint64_t> elements;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::size_t pos = 0;
        if (line[pos] == '-')
            throw parse_error(path.string() + ":" + std::to_string(lineno) +
                              ": negative entry");
        std::uint64_t value = 0;
        bool any = false;
        for (; pos < line.size(); ++pos) {
            char c = line[pos];
            if (c < '0' || c > '9')
                throw parse_error(path.string() + ":" + std::to_string(lineno) +
                                  ": invalid character '" + c + "'");
            std::uint64_t next = value * 10 + static_cast<std::uint64_t>(c - '0');
            if (next / 10 != value)
                throw parse_error(path.string() + ":" + std::to_string(lineno) +
                                  ": entry too large");
            value = next;
            any = true;
        }
        if (!any)
            throw parse_error(path.string() + ":" + std::to_string(lineno) +
                              ": empty entry");
        if (!elements.empty() && value <= elements.back())
            throw parse_error(path.string() + ":" + std::to_string(lineno) +
                              ": entries must be strictly increasing");
        elements.push_back(value);
    }
    return SetData{std::move(elements)};
}

std::vector<std::uint64_t> representation_counts(const SetData& a,
                                                 const SetData& b,
                                                 std::uint64_t n) {
    std::vector<std::uint64_t> r(n + 1, 0);
    Convolver conv(a, b, n);
    conv.run([&](std::uint64_t lo, std::uint64_t valid_bits,
                 const std::vector<std::vector<std::uint64_t>>& planes) {
        for (std::uint64_t bit = 0; bit < valid_bits; ++bit) {
            std::uint64_t value = 0;
            for (std::size_t p = 0; p < planes.size(); ++p)
                value |= ((planes[p][bit >> 6] >> (bit & 63)) & 1) << p;
            r[lo + bit] = value;
        }
    });
    return r;
}

RepReport rep_report(const SetData& a, const SetData& b, std::uint64_t n) {
    RepReport rep;
    rep.horizon = n;
    rep.min_count = ~std::uint64_t{0};
    rep.max_count = 0;
    std::optional<std::uint64_t> last_zero;

    Convolver conv(a, b, n);
    conv.run([&](std::uint64_t lo, std::uint64_t valid_bits,
                 const std::vector<std::vector<std::uint64_t>>& planes) {
        const std::size_t nwords =
            static_cast<std::size_t>((valid_bits + 63) / 64);
        rep.max_count = std::max(rep.max_count,
                                 block_max(planes, nwords, valid_bits));
        rep.min_count = std::min(rep.min_count,
                                 block_min(planes, nwords, valid_bits));

        for (std::size_t i = 0; i < nwords; ++i) {
            std::uint64_t any = 0;
            std::uint64_t multi = 0;
            for (std::size_t p = 0; p < planes.size(); ++p) {
                any |= planes[p][i];
                if (p > 0) multi |= planes[p][i];
            }
            const std::uint64_t valid =
                i + 1 < nwords ? ~std::uint64_t{0}
                               : word_mask(valid_bits - 64 * (nwords - 1));
            std::uint64_t zero = ~any & valid;
            if (zero) {
                std::uint64_t first = lo + 64 * i +
                    static_cast<std::uint64_t>(std::countr_zero(zero));
                if (!rep.first_zero) rep.first_zero = first;
                last_zero = lo + 64 * i +
                    (63 - static_cast<std::uint64_t>(std::countl_zero(zero)));
            }
            multi &= valid;
            if (multi && !rep.first_multi)
                rep.first_multi = lo + 64 * i +
                    static_cast<std::uint64_t>(std::countr_zero(multi));
        }
    });

    if (!last_zero)
        rep.threshold = 0;
    else if (*last_zero < n)
        rep.threshold = *last_zero + 1;
    // otherwise r(N) = 0: no gap-free suffix within the horizon
    return rep;
}

RepReport check_perfect(const PerfectPair& pair, std::uint64_t n) {
    SetData a{enumerate_members_u64(pair, Side::A, n)};
    SetData b{enumerate_members_u64(pair, Side::B, n)};
    return rep_report(a, b, n);
}

RepReport check_complement(const SetData& a, const SetData& b,
                           std::uint64_t n) {
    return rep_report(a, b, n);
}

RatioStats ratio_stats(const SetData& a, const SetData& b, std::uint64_t n) {
    if (n < 1) throw domain_error("ratio_stats: horizon must be >= 1");
    RatioStats st;

    auto counts_at = [&](std::uint64_t x) {
        return std::pair{count_at_most(a.elements, x),
                         count_at_most(b.elements, x)};
    };
    auto consider = [&](std::uint64_t x, std::uint64_t ca, std::uint64_t cb,
                        bool first) {
        mpq_class prod_ratio(mpz_class(ca) * mpz_class(cb), mpz_class(x));
        prod_ratio.canonicalize();
        std::uint64_t cmax = std::max(ca, cb);
        mpq_class count_ratio(mpz_class(cmax) * mpz_class(cmax), mpz_class(x));
        count_ratio.canonicalize();
        if (first || prod_ratio > st.max_product_ratio) {
            st.max_product_ratio = prod_ratio;
            st.product_argmax = x;
        }
        if (first || count_ratio > st.max_count_ratio_sq) {
            st.max_count_ratio_sq = count_ratio;
            st.count_argmax = x;
        }
    };
    auto consider_slack = [&](std::uint64_t x, std::uint64_t ca,
                              std::uint64_t cb, bool first) {
        mpz_class slack = mpz_class(ca) * mpz_class(cb) - mpz_class(x);
        if (first || slack < st.min_product_slack) {
            st.min_product_slack = slack;
            st.slack_argmin = x;
        }
    };

    // ratios only decrease while counts are flat, so maxima sit at x = 1 or
    // at members; the slack only decreases on flat stretches, so its minimum
    // sits just before a member or at N
    auto [ca, cb] = counts_at(1);
    consider(1, ca, cb, true);
    bool slack_first = true;

    std::vector<std::uint64_t> points;
    points.reserve(a.elements.size() + b.elements.size());
    std::merge(a.elements.begin(), a.elements.end(), b.elements.begin(),
               b.elements.end(), std::back_inserter(points));
    points.erase(std::unique(points.begin(), points.end()), points.end());

    for (std::uint64_t p : points) {
        if (p < 2) continue;
        if (p > n) break;
        auto [pca, pcb] = counts_at(p - 1);
        consider_slack(p - 1, pca, pcb, slack_first);
        slack_first = false;
        auto [nca, ncb] = counts_at(p);
        consider(p, nca, ncb, false);
    }
    auto [fca, fcb] = counts_at(n);
    consider_slack(n, fca, fcb, slack_first);
    return st;
}

} // namespace sxc
