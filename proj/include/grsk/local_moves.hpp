#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "grsk/matrix.hpp"

namespace grsk {

namespace detail {
inline void check_move_index(int i, int j, int n, int m) {
    if (i < 1 || i > n || j < 1 || j > m)
        throw std::out_of_range("local move index out of range");
}
}  // namespace detail

/// The elementary birational substitution at (i,j).  Interior cells replace
/// the 2x2 block (a,b;c,d) anchored at (i-1,j-1) by (bc/(ab+ac), b; c, d(b+c));
/// first-row and first-column cells multiply in their left/up neighbour;
/// (1,1) is the identity.
template <class S>
void local_move_inplace(Matrix<S>& x, int i, int j) {
    detail::check_move_index(i, j, x.rows(), x.cols());
    if (i == 1 && j == 1) return;
    if (i == 1) {
        x(1, j) = x(1, j - 1) * x(1, j);
        return;
    }
    if (j == 1) {
        x(i, 1) = x(i - 1, 1) * x(i, 1);
        return;
    }
    const S a = x(i - 1, j - 1), b = x(i - 1, j), c = x(i, j - 1), d = x(i, j);
    x(i - 1, j - 1) = (b * c) / (a * b + a * c);
    x(i, j) = d * (b + c);
}

template <class S>
void local_move_inverse_inplace(Matrix<S>& x, int i, int j) {
    detail::check_move_index(i, j, x.rows(), x.cols());
    if (i == 1 && j == 1) return;
    if (i == 1) {
        x(1, j) = x(1, j) / x(1, j - 1);
        return;
    }
    if (j == 1) {
        x(i, 1) = x(i, 1) / x(i - 1, 1);
        return;
    }
    const S a = x(i - 1, j - 1), b = x(i - 1, j), c = x(i, j - 1), d = x(i, j);
    x(i - 1, j - 1) = (b * c) / (a * b + a * c);
    x(i, j) = d / (b + c);
}

template <class S>
Matrix<S> local_move(Matrix<S> x, int i, int j) {
    local_move_inplace(x, i, j);
    return x;
}

template <class S>
Matrix<S> local_move_inverse(Matrix<S> x, int i, int j) {
    local_move_inverse_inplace(x, i, j);
    return x;
}

/// Cell visit order of one row sweep: pi^j_i applies the moves
/// (i,1),(i,2),...,(i,j) in that order.
inline void append_pi(std::vector<std::pair<int, int>>& seq, int i, int j) {
    for (int c = 1; c <= j; ++c) seq.emplace_back(i, c);
}

/// Move order of the row-insertion step R_i on an n x m matrix:
/// the sweeps pi^{m-k}_{i-k} for k = 0,1,...,(i ^ m)-1, in that order.
inline std::vector<std::pair<int, int>> row_insertion_sequence(int i, int m) {
    std::vector<std::pair<int, int>> seq;
    int sweeps = std::min(i, m);
    for (int k = 0; k < sweeps; ++k) append_pi(seq, i - k, m - k);
    return seq;
}

/// Full move order of the map T = R_n o ... o R_1.
inline std::vector<std::pair<int, int>> grsk_sequence(int n, int m) {
    std::vector<std::pair<int, int>> seq;
    for (int i = 1; i <= n; ++i) {
        auto r = row_insertion_sequence(i, m);
        seq.insert(seq.end(), r.begin(), r.end());
    }
    return seq;
}

/// Geometric RSK: T = R_n o ... o R_1 built from local moves.
template <class S>
Matrix<S> apply_grsk(Matrix<S> w) {
    for (auto [i, j] : grsk_sequence(w.rows(), w.cols())) local_move_inplace(w, i, j);
    return w;
}

/// Inverse map: the same moves inverted, in reverse order.
template <class S>
Matrix<S> invert_grsk(Matrix<S> t) {
    auto seq = grsk_sequence(t.rows(), t.cols());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        local_move_inverse_inplace(t, it->first, it->second);
    return t;
}

/// Single R_i applied in place (used by the symmetric recursion).
template <class S>
void apply_row_insertion(Matrix<S>& x, int i) {
    for (auto [a, b] : row_insertion_sequence(i, x.cols())) local_move_inplace(x, a, b);
}

/// The diagonal sweep rho^i_j: moves (i,j),(i-1,j-1),... up the anti-diagonal.
/// R_i == rho^i_m o ... o rho^i_1 gives an alternative factorization of the
/// same row-insertion step.
template <class S>
void apply_rho(Matrix<S>& x, int i, int j) {
    int steps = std::min(i, j);
    for (int q = 0; q < steps; ++q) local_move_inplace(x, i - q, j - q);
}

template <class S>
void apply_row_insertion_rho_form(Matrix<S>& x, int i) {
    for (int j = 1; j <= x.cols(); ++j) apply_rho(x, i, j);
}

}  // namespace grsk
