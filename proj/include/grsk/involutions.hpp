#pragma once

#include <algorithm>
#include <stdexcept>

#include "grsk/matrix.hpp"
#include "grsk/pattern.hpp"

namespace grsk {

namespace detail {

/// Boundary resolution for the entry-wise involution b_ij.  Returns the two
/// factors of the update x'_ij = (1/x_ij) * up_left * down_right:
///   up_left    = x_{i,j-1} + x_{i-1,j}   (missing neighbours -> 0,
///                                         except both missing at (1,1) -> 1)
///   down_right = (1/x_{i+1,j} + 1/x_{i,j+1})^{-1}
///                                        (missing reciprocals -> 0, except
///                                         both missing at (n,m) -> sum = 1)
template <class S>
struct BkBoundary {
    S up_left;
    S down_right;
};

template <class S>
BkBoundary<S> bk_factors(const Matrix<S>& x, int i, int j) {
    const int n = x.rows(), m = x.cols();
    BkBoundary<S> f{S(0), S(0)};
    if (i == 1 && j == 1)
        f.up_left = S(1);
    else if (i == 1)
        f.up_left = x(1, j - 1);
    else if (j == 1)
        f.up_left = x(i - 1, 1);
    else
        f.up_left = x(i, j - 1) + x(i - 1, j);

    if (i == n && j == m)
        f.down_right = S(1);
    else if (i == n)
        f.down_right = x(n, j + 1);
    else if (j == m)
        f.down_right = x(i + 1, m);
    else
        f.down_right = (x(i + 1, j) * x(i, j + 1)) / (x(i + 1, j) + x(i, j + 1));
    return f;
}

}  // namespace detail

/// Bender-Knuth style involution: replaces x_ij only.
template <class S>
void bender_knuth_inplace(Matrix<S>& x, int i, int j) {
    if (i < 1 || i > x.rows() || j < 1 || j > x.cols())
        throw std::out_of_range("bender_knuth: index out of range");
    auto f = detail::bk_factors(x, i, j);
    x(i, j) = f.up_left * f.down_right / x(i, j);
}

template <class S>
Matrix<S> bender_knuth(Matrix<S> x, int i, int j) {
    bender_knuth_inplace(x, i, j);
    return x;
}

/// r_j: bottom-row tweak x_{nj} <- x_{n,j+1}/x_{nj} (j < m), 1/x_{nm} (j = m).
template <class S>
void r_map_inplace(Matrix<S>& x, int j) {
    const int n = x.rows(), m = x.cols();
    if (j < 1 || j > m) throw std::out_of_range("r_map: index out of range");
    x(n, j) = (j < m) ? x(n, j + 1) / x(n, j) : S(1) / x(n, j);
}

/// h_j: the Bender-Knuth sweep b_{n-q, j-q}, q = 0, ..., (j ^ n) - 1.
template <class S>
void h_map_inplace(Matrix<S>& x, int j) {
    const int n = x.rows();
    int steps = std::min(j, n);
    for (int q = 0; q < steps; ++q) bender_knuth_inplace(x, n - q, j - q);
}

/// rho^n_j written through the involutions: h_j o r_j.  Coincides with the
/// diagonal local-move sweep apply_rho(x, n, j).
template <class S>
void rho_via_involutions_inplace(Matrix<S>& x, int j) {
    r_map_inplace(x, j);
    h_map_inplace(x, j);
}

namespace detail {

/// Embeds a triangle (square pattern, height = width = n) as the symmetric
/// n x n matrix it represents under the (P,Q) identification with Q = P.
template <class S>
Matrix<S> triangle_to_symmetric(const Pattern<S>& p) {
    const int n = p.height();
    if (p.width() != n) throw std::invalid_argument("triangle expected (height == width)");
    Matrix<S> x(n, n);
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= k; ++l) {
            x(n - l + 1, k - l + 1) = p(k, l);
            x(k - l + 1, n - l + 1) = p(k, l);
        }
    return x;
}

template <class S>
Pattern<S> triangle_from_symmetric(const Matrix<S>& x) {
    return p_pattern_from_matrix(x);
}

}  // namespace detail

/// t_j acting on triangles: h_j touches only the P half of X = (P,Q), so the
/// induced action on the pattern is read off a symmetric embedding.
template <class S>
Pattern<S> t_map(const Pattern<S>& p, int j) {
    const int n = p.height();
    if (j < 1 || j >= n) throw std::out_of_range("t_map: need 1 <= j < height");
    Matrix<S> x = detail::triangle_to_symmetric(p);
    h_map_inplace(x, j);
    return detail::triangle_from_symmetric(x);
}

/// q_i = t_1 o (t_2 o t_1) o ... o (t_i o ... o t_1): the analogue of the
/// Schuetzenberger involution when i = n-1.
template <class S>
Pattern<S> schuetzenberger(Pattern<S> p, int i) {
    const int n = p.height();
    if (p.width() != n) throw std::invalid_argument("schuetzenberger: triangle expected");
    if (i < 1 || i >= n) throw std::out_of_range("schuetzenberger: need 1 <= i < n");
    for (int k = i; k >= 1; --k)
        for (int j = 1; j <= k; ++j) p = t_map(p, j);
    return p;
}

/// s_i = q_i o t_1 o q_i; these satisfy the braid relations.
template <class S>
Pattern<S> braid_generator(Pattern<S> p, int i) {
    p = schuetzenberger(std::move(p), i);
    p = t_map(p, 1);
    return schuetzenberger(std::move(p), i);
}

}  // namespace grsk
