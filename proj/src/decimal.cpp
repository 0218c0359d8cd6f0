// decimal.cpp - integer-arithmetic decimal rendering

#include "sxc/decimal.hpp"

#include "sxc/error.hpp"

#include <cassert>

namespace sxc {

mpz_class pow10(unsigned k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
    return p;
}

namespace {

// scale v by 10^(2*frac) keeping exact rational form
mpq_class scale_sq(const mpq_class& v, long frac) {
    mpq_class t = v;
    if (frac >= 0)
        t *= mpq_class(pow10(static_cast<unsigned>(2 * frac)));
    else
        t /= mpq_class(pow10(static_cast<unsigned>(-2 * frac)));
    t.canonicalize();
    return t;
}

// round-half-even of sqrt(t) for t >= 0 rational.
// s = floor(sqrt(t)); the tie test compares 4t with (2s+1)^2 exactly.
mpz_class sqrt_round(const mpq_class& t) {
    mpz_class fl = t.get_num() / t.get_den();
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), fl.get_mpz_t());
    mpq_class half_sq(mpz_class(2 * s + 1) * mpz_class(2 * s + 1), 4);
    half_sq.canonicalize();
    if (t > half_sq) return s + 1;
    if (t < half_sq) return s;
    return mpz_odd_p(s.get_mpz_t()) ? mpz_class(s + 1) : s;
}

// round-half-even of v * 10^frac for v >= 0 rational
mpz_class rational_scaled(const mpq_class& v, long frac) {
    mpq_class t = v;
    if (frac >= 0)
        t *= mpq_class(pow10(static_cast<unsigned>(frac)));
    else
        t /= mpq_class(pow10(static_cast<unsigned>(-frac)));
    t.canonicalize();
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_num().get_mpz_t(),
                t.get_den().get_mpz_t());
    mpz_class twice = 2 * r;
    int c = cmp(twice, t.get_den());
    if (c > 0) return q + 1;
    if (c < 0) return q;
    return mpz_odd_p(q.get_mpz_t()) ? mpz_class(q + 1) : q;
}

// decimal exponent e of sqrt(v): 10^e <= sqrt(v) < 10^(e+1), v > 0
long sqrt_exponent(const mpq_class& v) {
    long shift = 0;
    mpq_class t = v;
    while (t < 1) { t *= 100; ++shift; }
    mpz_class fl = t.get_num() / t.get_den();
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), fl.get_mpz_t());
    long e = static_cast<long>(mpz_sizeinbase(s.get_mpz_t(), 10)) - 1;
    // sizeinbase may overestimate by one; settle exactly
    if (s < pow10(static_cast<unsigned>(e))) --e;
    return e - shift;
}

long rational_exponent(const mpq_class& v) {
    long shift = 0;
    mpq_class t = v;
    while (t < 1) { t *= 10; ++shift; }
    mpz_class fl = t.get_num() / t.get_den();
    long e = static_cast<long>(mpz_sizeinbase(fl.get_mpz_t(), 10)) - 1;
    if (fl < pow10(static_cast<unsigned>(e))) --e;
    return e - shift;
}

std::string render_sig(const mpz_class& scaled_in, long frac_in, unsigned sig) {
    mpz_class scaled = scaled_in;
    long frac = frac_in;
    // rounding can carry to exactly 10^sig; both renderings agree, keep sig digits
    if (scaled == pow10(sig)) {
        scaled = pow10(sig - 1);
        --frac;
    }
    return decimal_from_scaled(scaled, frac);
}

} // namespace

mpz_class sqrt_scaled(const mpq_class& v, long frac) {
    if (v < 0) throw domain_error("sqrt_scaled: negative value");
    return sqrt_round(scale_sq(v, frac));
}

std::string decimal_from_scaled(const mpz_class& scaled, long frac) {
    assert(scaled >= 0);
    std::string digits = scaled.get_str();
    if (frac <= 0) {
        digits.append(static_cast<std::size_t>(-frac), '0');
        return digits;
    }
    auto f = static_cast<std::size_t>(frac);
    if (digits.size() <= f)
        digits.insert(0, f + 1 - digits.size(), '0');
    digits.insert(digits.size() - f, 1, '.');
    return digits;
}

std::string sqrt_decimal(const mpq_class& v, unsigned sig) {
    if (sig == 0) throw domain_error("sqrt_decimal: sig must be >= 1");
    if (v < 0) throw domain_error("sqrt_decimal: negative value");
    if (v == 0) return render_sig(0, static_cast<long>(sig) - 1, sig);
    long e = sqrt_exponent(v);
    long frac = static_cast<long>(sig) - 1 - e;
    return render_sig(sqrt_scaled(v, frac), frac, sig);
}

std::string rational_decimal(const mpq_class& v, unsigned sig) {
    if (sig == 0) throw domain_error("rational_decimal: sig must be >= 1");
    if (v < 0) return "-" + rational_decimal(mpq_class(-v), sig);
    if (v == 0) return render_sig(0, static_cast<long>(sig) - 1, sig);
    long e = rational_exponent(v);
    long frac = static_cast<long>(sig) - 1 - e;
    return render_sig(rational_scaled(v, frac), frac, sig);
}

mpz_class fourth_root_45_scaled(unsigned frac) {
    // 4.5^(1/4)*10^f = sqrt(sqrt(4.5)*10^(2f)); the inner sqrt is taken with
    // guard digits so the outer rounding is exact for the digits kept
    const unsigned guard = 10;
    mpz_class inner = sqrt_scaled(mpq_class(9, 2), 2 * (frac + guard));
    mpq_class t(inner, pow10(2 * guard));
    t.canonicalize();
    return sqrt_round(t);
}

std::string gap_to_fourth_root_45(const mpq_class& v, unsigned sig) {
    const long work = static_cast<long>(sig) + 12;
    mpz_class diff = sqrt_scaled(v, work) - fourth_root_45_scaled(work);
    bool neg = diff < 0;
    if (neg) diff = -diff;
    if (diff == 0) return render_sig(0, static_cast<long>(sig) - 1, sig);
    mpq_class val(diff, pow10(static_cast<unsigned>(work)));
    val.canonicalize();
    std::string s = rational_decimal(val, sig);
    return neg ? "-" + s : s;
}

} // namespace sxc
