#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "starlex/rational.hpp"

using namespace starlex;

TEST_CASE("parse_rational accepts p/q, decimals, and plain integers exactly") {
    CHECK(parse_rational("1/2") == Rat(1) / 2);
    CHECK(parse_rational("3/4") == Rat(3) / 4);
    CHECK(parse_rational("2/4") == Rat(1) / 2);  // canonicalized
    CHECK(parse_rational("0.25") == Rat(1) / 4);
    CHECK(parse_rational("0.1") == Rat(1) / 10);  // exact digits, not double rounding
    CHECK(parse_rational(".5") == Rat(1) / 2);
    CHECK(parse_rational("2.") == Rat(2));
    CHECK(parse_rational("7") == Rat(7));
    CHECK(parse_rational("0") == Rat(0));
    CHECK(parse_rational("-1/3") == Rat(-1) / 3);
    CHECK(parse_rational("+0.75") == Rat(3) / 4);
    CHECK(parse_rational("  1/2  ") == Rat(1) / 2);
    // leading zeros must stay decimal, never octal
    CHECK(parse_rational("08/10") == Rat(4) / 5);
    CHECK(parse_rational("007") == Rat(7));
    CHECK(parse_rational("0.08") == Rat(2) / 25);
    CHECK(parse_rational("0.142857142857") == Rat(142857142857L) / Rat(1000000000000L));
}

TEST_CASE("parse_rational rejects malformed literals") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("   "), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("-"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1 / 2"), std::invalid_argument);
}

TEST_CASE("rational formatting") {
    CHECK(pq_string(Rat(1) / 2) == "1/2");
    CHECK(pq_string(Rat(3)) == "3/1");
    CHECK(pretty_string(Rat(3)) == "3");
    CHECK(pretty_string(Rat(-2) / 3) == "-2/3");
    CHECK(pretty_string(Rat(0)) == "0");
}

TEST_CASE("rat_pow") {
    CHECK(rat_pow(Rat(2) / 3, 0) == Rat(1));
    CHECK(rat_pow(Rat(2) / 3, 1) == Rat(2) / 3);
    CHECK(rat_pow(Rat(2) / 3, 5) == Rat(32) / 243);
    CHECK(rat_pow(Rat(-1) / 2, 3) == Rat(-1) / 8);
}

TEST_CASE("SqrtRat extracts square factors on construction") {
    CHECK(SqrtRat::sqrt_of(12) == SqrtRat(Rat(2), 3));   // sqrt(12) = 2 sqrt(3)
    CHECK(SqrtRat::sqrt_of(9) == SqrtRat(Rat(3)));       // perfect square collapses
    CHECK(SqrtRat::sqrt_of(1) == SqrtRat(Rat(1)));
    CHECK(SqrtRat(Rat(5), 50) == SqrtRat(Rat(25), 2));   // 5 sqrt(50) = 25 sqrt(2)
    CHECK(SqrtRat(Rat(0), 7) == SqrtRat(Rat(0)));        // zero coefficient normalizes
}

TEST_CASE("SqrtRat arithmetic and conversions") {
    const SqrtRat r3 = SqrtRat::sqrt_of(3);
    CHECK(r3.squared() == Rat(3));
    CHECK((Rat(2) * r3).squared() == Rat(12));
    CHECK(r3.to_double() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(SqrtRat(Rat(5) / 2).as_rational() == Rat(5) / 2);
    CHECK_THROWS_AS(r3.as_rational(), std::domain_error);

    SqrtRat sum = r3;
    sum += Rat(2) * r3;
    CHECK(sum == Rat(3) * r3);

    SqrtRat zero = SqrtRat(Rat(0));
    zero += r3;  // adding onto a zero adopts the radicand
    CHECK(zero == r3);
    SqrtRat r2 = SqrtRat::sqrt_of(2);
    CHECK_THROWS_AS(r2 += r3, std::domain_error);
}

TEST_CASE("SqrtRat printing") {
    CHECK(SqrtRat(Rat(3) / 4).pretty() == "3/4");
    CHECK(SqrtRat::sqrt_of(3).pretty() == "sqrt(3)");
    CHECK((Rat(2) / 3 * SqrtRat::sqrt_of(3)).pretty() == "sqrt(3)*2/3");
    CHECK(SqrtRat(Rat(0)).pretty() == "0");
}

TEST_CASE("SqrtRat rejects invalid radicands") {
    CHECK_THROWS_AS(SqrtRat(Rat(1), 0), std::domain_error);
    CHECK_THROWS_AS(SqrtRat(Rat(1), -4), std::domain_error);
}
