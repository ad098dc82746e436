#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grsk/dual.hpp"
#include "test_support.hpp"

using grsk::DualRational;
using grsk::Rational;
using grsk::dual_seed;

TEST_CASE("seeding gives unit gradients") {
    auto d = dual_seed({Rational(1), Rational(2)});
    REQUIRE(d.size() == 2);
    CHECK(d[0].value() == Rational(1));
    CHECK(d[0].partial(0) == Rational(1));
    CHECK(d[0].partial(1) == Rational(0));
    CHECK(d[1].value() == Rational(2));
    CHECK(d[1].partial(0) == Rational(0));
    CHECK(d[1].partial(1) == Rational(1));
    CHECK_THROWS_AS(dual_seed({Rational(0)}), std::domain_error);
    CHECK_THROWS_AS(dual_seed({Rational(-1)}), std::domain_error);
}

TEST_CASE("product rule: x0*x1 at (3,5)") {
    auto d = dual_seed({Rational(3), Rational(5)});
    auto p = d[0] * d[1];
    CHECK(p.value() == Rational(15));
    CHECK(p.partial(0) == Rational(5));
    CHECK(p.partial(1) == Rational(3));
}

TEST_CASE("quotient rule: x0/(x0+x1) at (1,1)") {
    // d/dx0 [x/(x+y)] = y/(x+y)^2 = 1/4;  d/dx1 = -x/(x+y)^2 = -1/4.
    auto d = dual_seed({Rational(1), Rational(1)});
    auto q = d[0] / (d[0] + d[1]);
    CHECK(q.value() == Rational(1, 2));
    CHECK(q.partial(0) == Rational(1, 4));
    CHECK(q.partial(1) == Rational(-1, 4));
}

TEST_CASE("partials match symbolic derivatives of +,-,*,/ on random pairs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        Rational x = grsk::test::random_positive_rational(rng, 12);
        Rational y = grsk::test::random_positive_rational(rng, 12);
        auto d = dual_seed({x, y});
        auto sum = d[0] + d[1];
        CHECK(sum.partial(0) == Rational(1));
        CHECK(sum.partial(1) == Rational(1));
        auto diff = d[0] - d[1];
        CHECK(diff.partial(0) == Rational(1));
        CHECK(diff.partial(1) == Rational(-1));
        auto prod = d[0] * d[1];
        CHECK(prod.partial(0) == y);
        CHECK(prod.partial(1) == x);
        auto quot = d[0] / d[1];
        CHECK(quot.partial(0) == Rational(1) / y);
        CHECK(quot.partial(1) == -x / (y * y));
    }
}

TEST_CASE("constants mix with seeded values") {
    auto d = dual_seed({Rational(2)});
    auto e = d[0] * DualRational(3) + DualRational(1);
    CHECK(e.value() == Rational(7));
    CHECK(e.partial(0) == Rational(3));
    // chain: f = (x+1)/(x*x), f' = (x*x - (x+1)*2x)/x^4 = (-x-2)/x^3 = -1/2 at x=2
    auto f = (d[0] + DualRational(1)) / (d[0] * d[0]);
    CHECK(f.value() == Rational(3, 4));
    CHECK(f.partial(0) == Rational(-1, 2));
}

TEST_CASE("mismatched gradient widths are rejected") {
    DualRational a(Rational(1), {Rational(1), Rational(0)});
    DualRational b(Rational(1), {Rational(1)});
    CHECK_THROWS_AS(a + b, std::logic_error);
}
