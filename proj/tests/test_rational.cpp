#include "doctest.h"

#include "sphereavoid/rational.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

using sphereavoid::Rational;

TEST_CASE("construction canonicalizes sign and gcd") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(3, -7).denominator() == 7);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts fractions, decimals and scientific notation") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("128614/1000000") == Rational(64307, 500000));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("-0") == Rational(0));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-3.5") == Rational(-7, 2));
    CHECK(Rational::parse("1e-30") == Rational(1) / Rational::pow10(30));
    CHECK(Rational::parse("2.5e3") == Rational(2500));
    CHECK(Rational::parse("-1.25e-2") == Rational(-1, 80));
    CHECK(Rational::parse(" 1/2 ") == Rational(1, 2));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1e"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("."), std::invalid_argument);
}

TEST_CASE("from_double is exact for dyadic values") {
    CHECK(Rational::from_double(0.5) == Rational(1, 2));
    CHECK(Rational::from_double(-0.375) == Rational(-3, 8));
    CHECK(Rational::from_double(3.0) == Rational(3));
    // 0.1 is not representable; the nearest double is slightly above.
    CHECK(Rational::from_double(0.1) != Rational(1, 10));
    CHECK(Rational::from_double(0.1).to_double() == 0.1);
}

TEST_CASE("pow10 handles negative exponents") {
    CHECK(Rational::pow10(0) == Rational(1));
    CHECK(Rational::pow10(3) == Rational(1000));
    CHECK(Rational::pow10(-3) == Rational(1, 1000));
    CHECK(Rational::pow10(-30) * Rational::pow10(30) == Rational(1));
}

TEST_CASE("floor and ceil agree with mathematical convention for negatives") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(5).floor() == 5);
    CHECK(Rational(5).ceil() == 5);
}

TEST_CASE("str emits reduced form and round-trips through parse") {
    CHECK(Rational(2, 6).str() == "1/3");
    CHECK(Rational(-10, 4).str() == "-5/2");
    CHECK(Rational(8, 4).str() == "2");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(128614, 1000000).str() == "64307/500000");
    std::ostringstream os;
    os << Rational(22, 7);
    CHECK(os.str() == "22/7");
    CHECK(Rational::parse(Rational(-355, 113).str()) == Rational(-355, 113));
}

TEST_CASE("decimal_str rounds half away from zero and drops trailing zeros") {
    CHECK(Rational(1, 3).decimal_str(6) == "0.333333");
    CHECK(Rational(-1, 3).decimal_str(6) == "-0.333333");
    CHECK(Rational(2, 3).decimal_str(3) == "0.667");
    CHECK(Rational(1, 2).decimal_str(4) == "0.5");
    CHECK(Rational(313, 1000).decimal_str(6) == "0.313");
    CHECK(Rational(5).decimal_str() == "5");
    CHECK(Rational(1, 6).decimal_str(1) == "0.2");
}

TEST_CASE("field axioms hold on random inputs") {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 50);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a(num(gen), den(gen));
        const Rational b(num(gen), den(gen));
        const Rational c(num(gen), den(gen));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("reciprocal and division by zero throw") {
    CHECK(Rational(3, 7).reciprocal() == Rational(7, 3));
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
    Rational a(1);
    CHECK_THROWS_AS(a /= Rational(0), std::domain_error);
}

TEST_CASE("abs, sign and comparisons are consistent") {
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK(Rational(-3, 4).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(3, 4).sign() == 1);
    CHECK(Rational(313, 1000) < Rational(1, 3));
    CHECK(Rational(1, 3) < Rational(334, 1000));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-2, 3).pow(2) == Rational(4, 9));
}
