// test_decimal.cpp - exact decimal rendering: scaling, rounding, carries

#include <doctest.h>

#include <gmpxx.h>

#include "sxc/decimal.hpp"
#include "sxc/error.hpp"

TEST_CASE("pow10") {
    CHECK(sxc::pow10(0) == 1);
    CHECK(sxc::pow10(1) == 10);
    CHECK(sxc::pow10(5) == 100000);
}

TEST_CASE("sqrt_scaled rounds half to even") {
    // sqrt(25/4) = 2.5 -> 2, sqrt(49/4) = 3.5 -> 4
    CHECK(sxc::sqrt_scaled(mpq_class(25, 4), 0) == 2);
    CHECK(sxc::sqrt_scaled(mpq_class(49, 4), 0) == 4);
    // non-ties round to nearest
    CHECK(sxc::sqrt_scaled(mpq_class(2), 3) == 1414);
    CHECK(sxc::sqrt_scaled(mpq_class(3), 3) == 1732);
    // exact squares stay exact at any scale
    CHECK(sxc::sqrt_scaled(mpq_class(4), 6) == 2000000);
    CHECK(sxc::sqrt_scaled(mpq_class(0), 8) == 0);
    // negative frac scales down: sqrt(10000) = 100, * 10^-1 = 10
    CHECK(sxc::sqrt_scaled(mpq_class(10000), -1) == 10);
    CHECK_THROWS_AS(sxc::sqrt_scaled(mpq_class(-1), 3), sxc::domain_error);
}

TEST_CASE("decimal_from_scaled formats fixed point") {
    CHECK(sxc::decimal_from_scaled(mpz_class(1456475315122), 12) ==
          "1.456475315122");
    CHECK(sxc::decimal_from_scaled(mpz_class(5), 2) == "0.05");
    CHECK(sxc::decimal_from_scaled(mpz_class(25), 0) == "25");
    CHECK(sxc::decimal_from_scaled(mpz_class(3), -2) == "300");
    CHECK(sxc::decimal_from_scaled(mpz_class(0), 4) == "0.0000");
}

TEST_CASE("sqrt_decimal significant-digit rendering") {
    CHECK(sxc::sqrt_decimal(mpq_class(3)) == "1.73205080757");
    CHECK(sxc::sqrt_decimal(mpq_class(4)) == "2.00000000000");
    CHECK(sxc::sqrt_decimal(mpq_class(9, 4)) == "1.50000000000");
    CHECK(sxc::sqrt_decimal(mpq_class(3), 4) == "1.732");
    CHECK(sxc::sqrt_decimal(mpq_class(300), 4) == "17.32");
    CHECK(sxc::sqrt_decimal(mpq_class(30000), 4) == "173.2");
    CHECK(sxc::sqrt_decimal(mpq_class(1, 4), 3) == "0.500");
}

TEST_CASE("rational_decimal significant-digit rendering") {
    CHECK(sxc::rational_decimal(mpq_class(1, 3)) == "0.333333333333");
    CHECK(sxc::rational_decimal(mpq_class(2, 3)) == "0.666666666667");
    // ties: 0.125 and 0.375 at two significant digits, half to even
    CHECK(sxc::rational_decimal(mpq_class(1, 8), 2) == "0.12");
    CHECK(sxc::rational_decimal(mpq_class(3, 8), 2) == "0.38");
    // rounding carry promotes the leading digit
    const mpq_class near_one(mpz_class("9999999999995"),
                             mpz_class("10000000000000"));
    CHECK(sxc::rational_decimal(near_one) == "1.00000000000");
    CHECK(sxc::rational_decimal(mpq_class(-1, 3), 5) == "-0.33333");
    CHECK(sxc::rational_decimal(mpq_class(0), 6) == "0.00000");
}

TEST_CASE("fourth root of 4.5") {
    CHECK(sxc::fourth_root_45_scaled(12) == 1456475315122);
    CHECK(sxc::fourth_root_45_scaled(0) == 1);
    CHECK(sxc::fourth_root_45_scaled(4) == 14565);
    // consistency across scales: truncating a finer scale differs by <= 1
    // in the last kept digit (both are correctly rounded)
    const mpz_class fine = sxc::fourth_root_45_scaled(20);
    const mpz_class coarse = sxc::fourth_root_45_scaled(12);
    mpz_class q = fine / sxc::pow10(8);
    mpz_class d = q - coarse;
    CHECK(abs(d) <= 1);
}

TEST_CASE("gap to the fourth root of 4.5") {
    // v is the squared statistic: gap = sqrt(v) - 4.5^(1/4)
    CHECK(sxc::gap_to_fourth_root_45(mpq_class(297, 140)) ==
          "0.0000371535608665");
    CHECK(sxc::gap_to_fourth_root_45(mpq_class(2)) == "-0.0422617527489");
    CHECK(sxc::gap_to_fourth_root_45(mpq_class(3)) == "0.275575492447");
}
