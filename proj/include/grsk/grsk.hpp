#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "grsk/local_moves.hpp"
#include "grsk/matrix.hpp"
#include "grsk/paths.hpp"

namespace grsk {

/// E_s(X) = s/x_11 + sum_(ij) (x_{i-1,j} + x_{i,j-1}) / x_ij, with
/// out-of-range neighbours counting as zero.
template <class S>
S energy(const Matrix<S>& x, const S& s) {
    S total = s / x(1, 1);
    for (int i = 1; i <= x.rows(); ++i)
        for (int j = 1; j <= x.cols(); ++j) {
            if (i > 1) total += x(i - 1, j) / x(i, j);
            if (j > 1) total += x(i, j - 1) / x(i, j);
        }
    return total;
}

/// Shape vector sigma(W) = (t_nm, t_{n-1,m-1}, ..., t_{n-p+1,m-p+1}), p = n^m.
template <class S>
std::vector<S> shape(const Matrix<S>& w) {
    Matrix<S> t = apply_grsk(w);
    int p = std::min(t.rows(), t.cols());
    std::vector<S> out;
    out.reserve(p);
    for (int k = 0; k < p; ++k) out.push_back(t(t.rows() - k, t.cols() - k));
    return out;
}

/// The fundamental identity: sum of s over anti-diagonal reciprocals plus the
/// remaining reciprocal weights equals E_s of the output matrix.  Exact over
/// rationals.
template <class S>
bool check_fundamental_identity(const Matrix<S>& w, const S& s) {
    const int n = w.rows(), m = w.cols(), p = std::min(n, m);
    S lhs(0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i <= p && j == p - i + 1)
                lhs += s / w(i, j);
            else
                lhs += S(1) / w(i, j);
        }
    return lhs == energy(apply_grsk(w), s);
}

/// sum_i 1/w_{i,p-i+1} == 1/t_11, p = n^m.
template <class S>
bool check_t11_identity(const Matrix<S>& w) {
    const int p = std::min(w.rows(), w.cols());
    S lhs(0);
    for (int i = 1; i <= p; ++i) lhs += S(1) / w(i, p - i + 1);
    return lhs == S(1) / apply_grsk(w)(1, 1);
}

/// T(W^t) == T(W)^t, exactly.
template <class S>
bool check_transpose_symmetry(const Matrix<S>& w) {
    return apply_grsk(w.transposed()) == apply_grsk(w).transposed();
}

constexpr int kPathOracleMaxSize = 14;  // guard for n+m of the enumeration

inline PathEnumerator rectangular_paths(int n, int m) {
    PathEnumerator pe;
    pe.cell_id = [n, m](int i, int j) {
        if (i < 1 || i > n || j < 1 || j > m) return -1;
        return (i - 1) * m + (j - 1);
    };
    return pe;
}

/// Brute-force sum over r-tuples of vertex-disjoint directed paths from
/// (1,1),...,(1,r) to (n,k-r+1),...,(n,k) of the product of visited weights.
template <class S>
S path_partition_oracle(const Matrix<S>& w, int k, int r) {
    const int n = w.rows(), m = w.cols();
    if (n + m > kPathOracleMaxSize)
        throw std::invalid_argument("path oracle: size guard exceeded (n+m > 14)");
    if (k < 1 || k > m || r < 1 || r > std::min(n, k))
        throw std::out_of_range("path oracle: invalid (k,r)");
    std::vector<std::pair<int, int>> starts, ends;
    for (int s = 1; s <= r; ++s) {
        starts.push_back({1, s});
        ends.push_back({n, k - r + s});
    }
    auto tuples = rectangular_paths(n, m).disjoint_tuples(starts, ends);
    S total(0);
    for (uint64_t mask : tuples) {
        S prod(1);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= m; ++j)
                if (mask & (uint64_t(1) << ((i - 1) * m + (j - 1)))) prod *= w(i, j);
        total += prod;
    }
    return total;
}

/// Product t_{n-r+1,k-r+1} ... t_{nk} read off the output matrix, compared
/// exactly against the path oracle.
template <class S>
bool check_path_identity(const Matrix<S>& w, int k, int r) {
    Matrix<S> t = apply_grsk(w);
    S prod(1);
    for (int q = 0; q < r; ++q) prod *= t(t.rows() - q, k - q);
    return prod == path_partition_oracle(w, k, r);
}

}  // namespace grsk
