// test_analysis.cpp - analytic constants and delta-side identities
//
// Expected decimals below were computed independently with 50-digit
// arithmetic and rounded; tolerances are set so an off-by-one in a formula
// (a sign, a factor of two, a swapped root) fails loudly while honest IEEE
// noise passes.

#include <doctest.h>

#include <cmath>

#include "sxc/analysis.hpp"
#include "sxc/error.hpp"

namespace an = sxc::analysis;

TEST_CASE("closed-form constants") {
    CHECK(an::c0() == doctest::Approx(0.0273149979589).epsilon(1e-10));
    CHECK(an::sx_lower_bound() ==
          doctest::Approx(1.01356548775).epsilon(1e-10));
    CHECK(an::fourth_root_45() ==
          doctest::Approx(1.45647531512).epsilon(1e-10));
    // C0 is the root of (1+c)^2 = (3-2c)^2/8 rearranged; verify directly:
    // at delta = C0 the larger root r2 equals sqrt2 and f = 1/2
    const an::Roots r = an::r_roots(an::c0());
    CHECK(std::abs(r.r2 - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(r.r1 - 1.37661142413) < 1e-10);
    CHECK(std::abs(an::f(an::c0()) - 0.5) < 1e-9);
}

TEST_CASE("discriminant and its root") {
    CHECK(an::discriminant(0.0) == 1.0);  // 9 - 8 exactly
    CHECK(an::discriminant(0.05) < 0.0);
    const double d0 = an::delta0();
    CHECK(d0 == doctest::Approx(0.027357433765).epsilon(1e-9));
    CHECK(std::abs(an::discriminant(d0)) < 1e-10);
    // delta0 sits just above C0
    CHECK(d0 > an::c0());
    CHECK(d0 - an::c0() < 1e-4);
}

TEST_CASE("quadratic roots at delta = 0") {
    const an::Roots r = an::r_roots(0.0);
    CHECK(r.r1 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.r2 == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("exponent f") {
    CHECK(an::f(0.0) == 0.0);  // log2 of exactly 1
    CHECK(an::f(0.01) == doctest::Approx(0.110803797484).epsilon(1e-10));
    // increasing on [0, C0]
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double d = an::c0() * i / 100;
        const double v = an::f(d);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("grid identities tie the pieces together") {
    const double d0 = an::delta0();
    const double hi = d0 - 1e-6;
    int n = 1000;
    double prev_r2 = 1e9;
    for (int i = 0; i <= n; ++i) {
        const double d = hi * i / n;
        const an::Roots r = an::r_roots(d);
        // product of roots: r1 r2 = 2(1+d)/(1+d)^2 = 2/(1+d)
        CHECK(std::abs(r.r1 * r.r2 * (1 + d) - 2.0) < 1e-12);
        // both roots satisfy the quadratic
        CHECK(std::abs(an::quadratic_value(d, r.r1)) < 1e-10);
        CHECK(std::abs(an::quadratic_value(d, r.r2)) < 1e-10);
        CHECK(r.r1 <= r.r2);
        // r2 decreases in delta
        CHECK(r.r2 < prev_r2);
        prev_r2 = r.r2;
    }
    // f(d) = 1 - log2 r2(d) on [0, C0]
    for (int i = 0; i <= n; ++i) {
        const double d = an::c0() * i / n;
        const double lhs = an::f(d);
        const double rhs = 1.0 - std::log2(an::r_roots(d).r2);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("domain ends at delta0") {
    CHECK_THROWS_AS(an::r_roots(0.05), sxc::domain_error);
    CHECK_THROWS_AS(an::f(0.05), sxc::domain_error);
    // quadratic_value has no square root, so it stays defined
    CHECK(an::quadratic_value(0.05, 1.0) ==
          doctest::Approx((1.05 * 1.05) - 2.9 + 2.1));
}
