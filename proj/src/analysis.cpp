// analysis.cpp - closed-form constants, bisection for delta0, f and roots

#include "sxc/analysis.hpp"

#include <cmath>

#include "sxc/error.hpp"

namespace sxc::analysis {

double c0() {
    return 0.5 * (-3.0 - std::sqrt(2.0) + std::sqrt(3.0 + 12.0 * std::sqrt(2.0)));
}

double discriminant(double delta) {
    const double a = 3.0 - 2.0 * delta;
    const double b = 1.0 + delta;
    return a * a - 8.0 * b * b * b;
}

double delta0() {
    // D(0) = 1 > 0 and D(0.1) < 0; D is strictly decreasing on [0, 0.1]
    static const double root = [] {
        double lo = 0.0, hi = 0.1;
        while (hi - lo > 1e-14) {
            const double mid = 0.5 * (lo + hi);
            (discriminant(mid) > 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return root;
}

Roots r_roots(double delta) {
    const double d = discriminant(delta);
    if (d < 0.0)
        throw domain_error("r_roots: discriminant negative (delta > delta0)");
    const double s = std::sqrt(d);
    const double denom = 2.0 * (1.0 + delta) * (1.0 + delta);
    return Roots{(3.0 - 2.0 * delta - s) / denom,
                 (3.0 - 2.0 * delta + s) / denom};
}

double f(double delta) {
    const double a = 3.0 - 2.0 * delta;
    const double b = 2.0 * delta + 2.0;
    const double inner = a * a - b * b * b;  // equals the discriminant
    if (inner < 0.0)
        throw domain_error("f: argument past delta0");
    return std::log2(b * b / (a + std::sqrt(inner)));
}

double quadratic_value(double delta, double z) {
    const double b = 1.0 + delta;
    return b * b * z * z - (3.0 - 2.0 * delta) * z + 2.0 * b;
}

double sx_lower_bound() { return std::sqrt(1.0 + c0()); }

double fourth_root_45() { return std::sqrt(std::sqrt(4.5)); }

} // namespace sxc::analysis
