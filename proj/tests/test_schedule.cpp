// test_schedule.cpp - grammar, indexing, digit expansion round-trips

#include <doctest.h>

#include <gmpxx.h>

#include "sxc/schedule.hpp"

using sxc::RadixSchedule;

TEST_CASE("parse round-trips canonical text") {
    for (const char* text : {";2*", "5,7;2*", "3,3,4;2*", ";2,3*", "7",
                             "2,3,4", "10,11;12,13*"}) {
        const RadixSchedule s = RadixSchedule::parse(text);
        CHECK(s.to_string() == text);
        CHECK(RadixSchedule::parse(s.to_string()) == s);
    }
}

TEST_CASE("parse rejects malformed schedules") {
    for (const char* text :
         {"", ";", "*", ";*", "2;", "2;*", "2;3", ";2", "2,,3", ",2", "2,",
          "1;2*", ";1*", "0,2", "2;3;4*", " 2", "2 ", "2, 3", "a", "2;3x*",
          "-2", ";2*;"}) {
        CAPTURE(text);
        CHECK_THROWS_AS(RadixSchedule::parse(text), sxc::parse_error);
    }
}

TEST_CASE("factories validate entries") {
    CHECK_THROWS_AS(RadixSchedule::finite({mpz_class(1)}), sxc::domain_error);
    CHECK_THROWS_AS(RadixSchedule::periodic({}, {}), sxc::domain_error);
    CHECK_THROWS_AS(RadixSchedule::periodic({mpz_class(3)}, {mpz_class(0)}),
                    sxc::domain_error);
    CHECK(RadixSchedule::finite({mpz_class(2), mpz_class(9)}).is_finite());
}

TEST_CASE("radix is 1-based and tails repeat") {
    const RadixSchedule s = RadixSchedule::parse("5,7;2,3*");
    CHECK(s.prefix_size() == 2);
    CHECK(s.tail_size() == 2);
    CHECK(s.radix(1) == 5);
    CHECK(s.radix(2) == 7);
    CHECK(s.radix(3) == 2);
    CHECK(s.radix(4) == 3);
    CHECK(s.radix(5) == 2);
    CHECK(s.radix(104) == 3);  // even offset into the tail
}

TEST_CASE("weight is the product of the first k radices") {
    const RadixSchedule s = RadixSchedule::parse("5,7;2*");
    CHECK(s.weight(0) == 1);
    CHECK(s.weight(1) == 5);
    CHECK(s.weight(2) == 35);
    CHECK(s.weight(3) == 70);
    CHECK(s.weight(4) == 140);
}

TEST_CASE("finite schedules throw past their last position") {
    const RadixSchedule s = RadixSchedule::parse("2,3,4");
    CHECK(s.position_count() == 3);
    CHECK(s.radix(3) == 4);
    CHECK_THROWS_AS(s.radix(4), sxc::domain_error);
    CHECK(s.weight(3) == 24);
    CHECK_THROWS_AS(s.weight(4), sxc::domain_error);
    CHECK_THROWS_AS(s.to_digits(mpz_class(24)), sxc::domain_error);
    CHECK(s.to_digits(mpz_class(23)).size() == 3);
}

TEST_CASE("digit expansion matches grade-school arithmetic") {
    const RadixSchedule s = RadixSchedule::parse("5,7;2*");
    // 4 + 3*5 + 1*35 + 1*70 = 124
    const sxc::DigitVector d = s.to_digits(mpz_class(124));
    REQUIRE(d.size() == 4);
    CHECK(d[0] == 4);
    CHECK(d[1] == 3);
    CHECK(d[2] == 1);
    CHECK(d[3] == 1);
    CHECK(s.from_digits(d) == 124);
    CHECK(s.to_digits(mpz_class(0)).empty());
}

TEST_CASE("from_digits validates digit ranges") {
    const RadixSchedule s = RadixSchedule::parse(";2,3*");
    const mpz_class two(2);
    CHECK_THROWS_AS(s.from_digits(std::vector<mpz_class>{two}),
                    sxc::domain_error);  // position 0 has radix 2
    CHECK(s.from_digits(std::vector<mpz_class>{mpz_class(1), two}) == 5);
    CHECK_THROWS_AS(s.from_digits(std::vector<mpz_class>{mpz_class(-1)}),
                    sxc::domain_error);
}

TEST_CASE("to_digits/from_digits round-trip on random big values") {
    const RadixSchedule s = RadixSchedule::parse("5,7;2,3,11*");
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20240817UL);
    for (int i = 0; i < 200; ++i) {
        const mpz_class n = rng.get_z_bits(200);
        const sxc::DigitVector d = s.to_digits(n);
        if (!d.empty()) CHECK(d.back() != 0);  // canonical: no leading zero
        for (std::size_t p = 0; p < d.size(); ++p) {
            CHECK(d[p] >= 0);
            CHECK(d[p] < s.radix(p + 1));
        }
        CHECK(s.from_digits(d) == n);
    }
}

TEST_CASE("to_digits rejects negatives") {
    const RadixSchedule s = RadixSchedule::parse(";2*");
    CHECK_THROWS_AS(s.to_digits(mpz_class(-1)), sxc::domain_error);
}
