#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grsk/determinant.hpp"
#include "test_support.hpp"

using grsk::Matrix;
using grsk::Rational;

TEST_CASE("fixed determinants") {
    Matrix<Rational> id3(3, 3, Rational(0));
    for (int i = 1; i <= 3; ++i) id3(i, i) = Rational(1);
    CHECK(grsk::det_exact(id3) == Rational(1));

    auto swap2 = grsk::test::from_ints({{0, 1}, {1, 0}});
    CHECK(grsk::det_exact(swap2) == Rational(-1));

    auto m = grsk::test::from_ints({{2, 1}, {1, 1}});
    CHECK(grsk::det_exact(m) == Rational(1));

    Matrix<Rational> empty(0, 0);
    CHECK(grsk::det_exact(empty) == Rational(1));

    auto singular = grsk::test::from_ints({{1, 2}, {2, 4}});
    CHECK(grsk::det_exact(singular) == Rational(0));

    Matrix<Rational> rect(2, 3);
    CHECK_THROWS_AS(grsk::det_exact(rect), std::invalid_argument);
}

TEST_CASE("bareiss equals cofactor expansion on random small matrices") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            Matrix<Rational> m(n, n);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) m(i, j) = grsk::test::random_signed_rational(rng, 6);
            CHECK(grsk::det_exact(m) == grsk::det_cofactor(m));
        }
    }
}

TEST_CASE("pivoting handles leading zeros") {
    auto m = grsk::test::from_ints({{0, 2, 1}, {3, 0, 0}, {1, 1, 1}});
    CHECK(grsk::det_exact(m) == grsk::det_cofactor(m));
}
