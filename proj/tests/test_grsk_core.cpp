#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grsk/grsk.hpp"
#include "grsk/jacobian.hpp"
#include "test_support.hpp"

using grsk::Matrix;
using grsk::Rational;
using grsk::test::from_ints;

TEST_CASE("2x2 map matches the closed form (bc/(b+c), ab; ac, ad(b+c))") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        Rational a = grsk::test::random_positive_rational(rng);
        Rational b = grsk::test::random_positive_rational(rng);
        Rational c = grsk::test::random_positive_rational(rng);
        Rational d = grsk::test::random_positive_rational(rng);
        Matrix<Rational> w(2, 2);
        w(1, 1) = a;
        w(1, 2) = b;
        w(2, 1) = c;
        w(2, 2) = d;
        auto t = grsk::apply_grsk(w);
        CHECK(t(1, 1) == b * c / (b + c));
        CHECK(t(1, 2) == a * b);
        CHECK(t(2, 1) == a * c);
        CHECK(t(2, 2) == a * d * (b + c));
    }
}

TEST_CASE("worked 2x2 instance and its inverse") {
    auto t = grsk::apply_grsk(from_ints({{1, 2}, {3, 4}}));
    Matrix<Rational> expect(2, 2);
    expect(1, 1) = Rational(6, 5);
    expect(1, 2) = Rational(2);
    expect(2, 1) = Rational(3);
    expect(2, 2) = Rational(20);
    CHECK(t == expect);
    CHECK(grsk::invert_grsk(expect) == from_ints({{1, 2}, {3, 4}}));
}

TEST_CASE("1x1 is the identity") {
    auto w = from_ints({{7}});
    CHECK(grsk::apply_grsk(w) == w);
    CHECK(grsk::invert_grsk(w) == w);
}

TEST_CASE("bijectivity on random rational matrices") {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 30; ++trial) {
        auto w = grsk::test::random_positive_matrix(rng, 4, 5, 7);
        CHECK(grsk::invert_grsk(grsk::apply_grsk(w)) == w);
    }
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            auto w = grsk::test::random_positive_matrix(rng, n, m);
            CHECK(grsk::invert_grsk(grsk::apply_grsk(w)) == w);
            CHECK(grsk::apply_grsk(grsk::invert_grsk(w)) == w);
        }
}

TEST_CASE("rho-form of the row insertion agrees with the sweep form") {
    std::mt19937_64 rng(4);
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m) {
            auto w = grsk::test::random_positive_matrix(rng, n, m);
            auto a = w, b = w;
            for (int i = 1; i <= n; ++i) {
                grsk::apply_row_insertion(a, i);
                grsk::apply_row_insertion_rho_form(b, i);
                CHECK(a == b);
            }
            CHECK(a == grsk::apply_grsk(w));
        }
}

TEST_CASE("energy values") {
    Matrix<Rational> x(2, 2);
    x(1, 1) = Rational(1, 2);
    x(1, 2) = Rational(1);
    x(2, 1) = Rational(1);
    x(2, 2) = Rational(2);
    CHECK(grsk::energy(x, Rational(1)) == Rational(4));
    auto single = from_ints({{5}});
    CHECK(grsk::energy(single, Rational(0)) == Rational(0));
    CHECK(grsk::energy(single, Rational(3)) == Rational(3, 5));
}

TEST_CASE("fundamental identity, exactly") {
    CHECK(grsk::check_fundamental_identity(from_ints({{1, 1}, {1, 1}}), Rational(1)));
    CHECK(grsk::check_fundamental_identity(from_ints({{9}}), Rational(22, 7)));
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        auto w = grsk::test::random_positive_matrix(rng, 4, 6);
        CHECK(grsk::check_fundamental_identity(w, Rational(3, 7)));
        CHECK(grsk::check_fundamental_identity(w, grsk::test::random_positive_rational(rng)));
    }
}

TEST_CASE("anti-diagonal reciprocal identity") {
    CHECK(grsk::check_t11_identity(from_ints({{1, 1}, {1, 1}})));
    CHECK(grsk::check_t11_identity(from_ints({{4}})));
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(grsk::check_t11_identity(grsk::test::random_positive_matrix(rng, 3, 3)));
}

TEST_CASE("shape vector") {
    auto ones = from_ints({{1, 1}, {1, 1}});
    auto s = grsk::shape(ones);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == Rational(2));
    CHECK(s[1] == Rational(1, 2));

    auto row = from_ints({{2, 3, 5}});
    auto s1 = grsk::shape(row);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0] == Rational(30));

    auto s2 = grsk::shape(from_ints({{1, 2}, {3, 4}}));
    CHECK(s2[0] == Rational(20));
    CHECK(s2[1] == Rational(6, 5));
}

TEST_CASE("path oracle on tiny instances") {
    auto ones = from_ints({{1, 1}, {1, 1}});
    CHECK(grsk::path_partition_oracle(ones, 2, 1) == Rational(2));
    CHECK(grsk::path_partition_oracle(ones, 2, 2) == Rational(1));
    auto row = from_ints({{2, 3, 5}});
    CHECK(grsk::path_partition_oracle(row, 3, 1) == Rational(30));
    CHECK_THROWS_AS(grsk::path_partition_oracle(ones, 3, 1), std::out_of_range);
    Matrix<Rational> big(8, 8, Rational(1));
    CHECK_THROWS_AS(grsk::path_partition_oracle(big, 1, 1), std::invalid_argument);
}

TEST_CASE("output entries are non-intersecting path partition functions") {
    std::mt19937_64 rng(31);
    for (auto [n, m] : {std::pair{2, 3}, {3, 3}, {4, 3}, {3, 5}}) {
        auto w = grsk::test::random_positive_matrix(rng, n, m, 5);
        for (int k = 1; k <= m; ++k)
            for (int r = 1; r <= std::min(n, k); ++r) CHECK(grsk::check_path_identity(w, k, r));
    }
}

TEST_CASE("transpose symmetry") {
    std::mt19937_64 rng(17);
    CHECK(grsk::check_transpose_symmetry(grsk::test::random_positive_matrix(rng, 3, 5)));
    CHECK(grsk::check_transpose_symmetry(from_ints({{3}})));
    // symmetric input gives symmetric output
    auto w = grsk::test::random_positive_matrix(rng, 4, 4);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) w(j, i) = w(i, j);
    auto t = grsk::apply_grsk(w);
    CHECK(t == t.transposed());
}

TEST_CASE("log-Jacobian of the map and of single moves is +-1") {
    std::mt19937_64 rng(23);
    for (auto [n, m] : {std::pair{1, 1}, {2, 2}, {3, 3}, {2, 4}, {4, 2}}) {
        auto w = grsk::test::random_positive_matrix(rng, n, m, 5);
        auto det = grsk::log_jacobian_det(
            [](const Matrix<grsk::DualRational>& x) { return grsk::apply_grsk(x); }, w);
        CHECK(grsk::is_plus_minus_one(det));
    }
    auto w = grsk::test::random_positive_matrix(rng, 3, 3, 5);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            auto det = grsk::log_jacobian_det(
                [i, j](const Matrix<grsk::DualRational>& x) { return grsk::local_move(x, i, j); },
                w);
            CHECK(grsk::is_plus_minus_one(det));
        }
}
