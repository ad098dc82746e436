#pragma once

#include <random>
#include <vector>

#include "grsk/matrix.hpp"
#include "grsk/rational.hpp"
#include "grsk/symmetric.hpp"
#include "grsk/triangular.hpp"

namespace grsk::test {

/// Random positive rational with small numerator/denominator, keeping bignum
/// growth manageable through deep compositions.
inline Rational random_positive_rational(std::mt19937_64& rng, int hi = 9) {
    std::uniform_int_distribution<int> d(1, hi);
    return Rational(d(rng), d(rng));
}

inline Rational random_signed_rational(std::mt19937_64& rng, int hi = 9) {
    std::uniform_int_distribution<int> d(1, hi);
    std::bernoulli_distribution flip(0.5);
    Rational r(d(rng), d(rng));
    return flip(rng) ? r : -r;
}

inline Matrix<Rational> random_positive_matrix(std::mt19937_64& rng, int n, int m, int hi = 9) {
    Matrix<Rational> w(n, m);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) w(i, j) = random_positive_rational(rng, hi);
    return w;
}

inline SymmetricMatrix<Rational> random_symmetric(std::mt19937_64& rng, int n, int hi = 9) {
    SymmetricMatrix<Rational> w(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) w(i, j) = random_positive_rational(rng, hi);
    return w;
}

inline TriangularArray<Rational> random_triangular(std::mt19937_64& rng, int n, int hi = 9) {
    TriangularArray<Rational> w(n);
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) w(i, j) = random_positive_rational(rng, hi);
    return w;
}

inline Matrix<Rational> from_ints(std::vector<std::vector<long>> rows) {
    Matrix<Rational> w(int(rows.size()), int(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) w(int(i) + 1, int(j) + 1) = Rational(rows[i][j]);
    return w;
}

}  // namespace grsk::test
