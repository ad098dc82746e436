#pragma once

#include <gmpxx.h>

#include <vector>

#include "grsk/matrix.hpp"
#include "grsk/rational.hpp"

namespace grsk {

/// Exact determinant of an integer matrix by fraction-free (Bareiss)
/// elimination.  Entries stay integral throughout; every division is exact.
inline mpz_class det_bareiss_int(std::vector<std::vector<mpz_class>> a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    mpz_class prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a[k][k]) == 0) {
            size_t piv = k + 1;
            while (piv < n && sgn(a[piv][k]) == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : mpz_class(-a[n - 1][n - 1]);
}

/// Exact determinant of a rational matrix.  Rows are scaled to integers
/// (tracking the scaling), then eliminated fraction-free.
inline Rational det_exact(const Matrix<Rational>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: matrix not square");
    const int n = m.rows();
    if (n == 0) return Rational(1);

    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpq_class scale(1);  // product of row multipliers
    for (int i = 0; i < n; ++i) {
        mpz_class lcm(1);
        for (int j = 0; j < n; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i + 1, j + 1).denominator().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            const Rational& r = m(i + 1, j + 1);
            a[i][j] = r.numerator() * (lcm / r.denominator());
        }
        scale *= lcm;
    }
    mpq_class det(det_bareiss_int(std::move(a)));
    det /= scale;
    det.canonicalize();
    return Rational(std::move(det));
}

/// Cofactor-expansion determinant; exponential cost, used as an independent
/// oracle for small matrices.
inline Rational det_cofactor(const Matrix<Rational>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_cofactor: matrix not square");
    const int n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m(1, 1);
    Rational det(0);
    int sign = 1;
    for (int c = 1; c <= n; ++c) {
        Matrix<Rational> minor(n - 1, n - 1);
        for (int i = 2; i <= n; ++i) {
            int jj = 1;
            for (int j = 1; j <= n; ++j) {
                if (j == c) continue;
                minor(i - 1, jj++) = m(i, j);
            }
        }
        Rational term = m(1, c) * det_cofactor(minor);
        det += sign > 0 ? term : -term;
        sign = -sign;
    }
    return det;
}

}  // namespace grsk
