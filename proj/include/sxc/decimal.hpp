#pragma once
// decimal.hpp - exact decimal rendering of rationals and their square roots
//
// All comparisons in the library happen on exact rationals; decimals exist
// only for display.  Square roots are rendered by integer arithmetic:
// round(sqrt(v) * 10^frac) with round-half-even, so output is deterministic
// and correct in the last digit.

#include <string>

#include <gmpxx.h>

namespace sxc {

mpz_class pow10(unsigned k);

// round-half-even of sqrt(v) * 10^frac, v >= 0 rational, frac may be negative
mpz_class sqrt_scaled(const mpq_class& v, long frac);

// fixed-point string for scaled * 10^-frac (frac may be negative)
std::string decimal_from_scaled(const mpz_class& scaled, long frac);

// sqrt(v) to `sig` significant digits, round-half-even, fixed-point notation
std::string sqrt_decimal(const mpq_class& v, unsigned sig = 12);

// rational value itself to `sig` significant digits (round-half-even)
std::string rational_decimal(const mpq_class& v, unsigned sig = 12);

// round-half-even of 4.5^(1/4) * 10^frac (computed via nested integer sqrt
// with guard digits; exact to the last digit for frac <= 30)
mpz_class fourth_root_45_scaled(unsigned frac);

// sqrt(v) - 4.5^(1/4), rendered to `sig` significant digits; v is a squared
// statistic, so the difference is the gap of sqrt(v) to the infimum
std::string gap_to_fourth_root_45(const mpq_class& v, unsigned sig = 12);

} // namespace sxc
