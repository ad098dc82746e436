#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grsk/rational.hpp"

using grsk::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
    Rational r(6, 8);
    CHECK(r.to_string() == "3/4");
    CHECK(Rational(-6, 8).to_string() == "-3/4");
    CHECK(Rational(6, -8).to_string() == "-3/4");
    CHECK(Rational(-6, -8).to_string() == "3/4");
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational(42).to_string() == "42");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("string round trip") {
    for (const char* s : {"0", "1", "-7", "3/4", "-22/7", "123456789123456789/2"}) {
        CHECK(Rational::from_string(s).to_string() == s);
    }
    CHECK(Rational::from_string(" 3/6 ").to_string() == "1/2");
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(a < b * Rational(2));
    CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(Rational::pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("arithmetic stays reduced through long products") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(1, 50);
    Rational acc(1);
    for (int k = 0; k < 300; ++k) {
        Rational r(d(rng), d(rng));
        acc = acc * r / r;  // net identity
        acc += Rational(0);
    }
    CHECK(acc == Rational(1));
}
