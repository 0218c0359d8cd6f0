#pragma once
// analysis.hpp - the delta-side analytic constants and functions
//
// Everything here is real-valued (IEEE double, ~16 significant digits):
// the constant C0 = (1/2)(-3 - sqrt2 + sqrt(3 + 12 sqrt2)), the discriminant
// D(d) = (3-2d)^2 - 8(1+d)^3 with its root delta0, the quadratic
// p_d(z) = (1+d)^2 z^2 - (3-2d) z + 2(1+d) and its roots r1 <= r2, and the
// exponent f(d) = log2((2d+2)^2 / (3-2d + sqrt((3-2d)^2 - (2d+2)^3))),
// which satisfies f(d) = 1 - log2 r2(d).  Functions with a square root of
// the discriminant throw sxc::domain_error once D(d) < 0 (d > delta0).

namespace sxc::analysis {

struct Roots {
    double r1;  // (3-2d - sqrt(D)) / (2(1+d)^2)
    double r2;  // (3-2d + sqrt(D)) / (2(1+d)^2)
};

double c0();
double discriminant(double delta);
// root of the discriminant in (0, 0.1), bisected to an interval <= 1e-14
double delta0();
Roots r_roots(double delta);
double f(double delta);
double quadratic_value(double delta, double z);
// sqrt(1 + C0), the universal lower bound for SX
double sx_lower_bound();
// 4.5^(1/4), the infimum of SX over these pairs
double fourth_root_45();

} // namespace sxc::analysis
