#pragma once

#include <stdexcept>
#include <vector>

#include "grsk/jacobian.hpp"
#include "grsk/local_moves.hpp"
#include "grsk/matrix.hpp"

namespace grsk {

/// Symmetric matrix stored as its upper triangle (row-major, i <= j).
template <class S>
class SymmetricMatrix {
public:
    SymmetricMatrix() : n_(0) {}
    explicit SymmetricMatrix(int n) : n_(n), e_(size_t(n) * (n + 1) / 2) {
        if (n < 1) throw std::invalid_argument("symmetric matrix: need n >= 1");
    }
    SymmetricMatrix(int n, std::vector<S> upper) : n_(n), e_(std::move(upper)) {
        if (e_.size() != size_t(n) * (n + 1) / 2)
            throw std::invalid_argument("symmetric matrix: wrong upper-triangle length");
    }

    int size() const { return n_; }
    const std::vector<S>& upper() const { return e_; }

    S& operator()(int i, int j) { return e_[index(i, j)]; }
    const S& operator()(int i, int j) const { return e_[index(i, j)]; }

    Matrix<S> full() const {
        Matrix<S> x(n_, n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) x(i, j) = (*this)(i, j);
        return x;
    }

    static SymmetricMatrix from_full(const Matrix<S>& x) {
        if (x.rows() != x.cols()) throw std::invalid_argument("from_full: square required");
        SymmetricMatrix s(x.rows());
        for (int i = 1; i <= x.rows(); ++i)
            for (int j = i; j <= x.cols(); ++j) {
                if (!(x(i, j) == x(j, i)))
                    throw std::logic_error("from_full: matrix is not symmetric");
                s(i, j) = x(i, j);
            }
        return s;
    }

    friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

private:
    size_t index(int i, int j) const {
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n_) throw std::out_of_range("symmetric matrix: index");
        return size_t(i - 1) * n_ - size_t(i - 1) * i / 2 + (j - 1);
    }
    int n_;
    std::vector<S> e_;
};

/// Restriction of the full map to symmetric inputs; the output is asserted
/// symmetric before the upper triangle is returned.
template <class S>
SymmetricMatrix<S> apply_grsk_symmetric(const SymmetricMatrix<S>& w) {
    Matrix<S> t = apply_grsk(w.full());
    return SymmetricMatrix<S>::from_full(t);  // throws if asymmetric
}

/// One step of the symmetric recursion: given T for the leading
/// (n-1) x (n-1) block, the new column (w_{1n},...,w_{n-1,n}) and w_nn,
/// produces T for the n x n matrix without touching the full-matrix map.
template <class S>
SymmetricMatrix<S> symmetric_recursion_step(const SymmetricMatrix<S>& prev,
                                            const std::vector<S>& new_col, const S& w_nn) {
    const int n = prev.size() + 1;
    if (new_col.size() != size_t(n - 1))
        throw std::invalid_argument("symmetric_recursion_step: column length mismatch");
    if (n == 1) throw std::invalid_argument("symmetric_recursion_step: nothing to extend");

    // Stack the previous output over the new column and row-insert, then
    // transpose: this is the intermediate rectangle S.
    Matrix<S> stacked(n, n - 1);
    Matrix<S> prev_full = prev.full();
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) stacked(i, j) = prev_full(i, j);
    for (int j = 1; j < n; ++j) stacked(n, j) = new_col[j - 1];
    apply_row_insertion(stacked, n);
    Matrix<S> s = stacked.transposed();  // (n-1) x n

    SymmetricMatrix<S> t(n);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) t(i, j) = s(i, j);
    t(1, 1) = s(1, 2) / (S(2) * s(1, 1));
    for (int i = 2; i <= n - 1; ++i) t(i, i) = s(i, i + 1) * s(i - 1, i) / s(i, i);
    t(n, n) = S(2) * s(n - 1, n) * w_nn;
    return t;
}

/// Builds T(W) for symmetric W entirely through the recursion; an
/// independent second route to apply_grsk_symmetric.
template <class S>
SymmetricMatrix<S> apply_grsk_symmetric_recursive(const SymmetricMatrix<S>& w) {
    const int n = w.size();
    SymmetricMatrix<S> t(1);
    t(1, 1) = w(1, 1);
    for (int k = 2; k <= n; ++k) {
        std::vector<S> col;
        col.reserve(k - 1);
        for (int i = 1; i < k; ++i) col.push_back(w(i, k));
        t = symmetric_recursion_step(t, col, w(k, k));
    }
    return t;
}

/// 4^floor(n/2) prod_i w_ii == alternating product of output diagonal
/// entries, exactly.
template <class S>
bool diagonal_product_identity(const SymmetricMatrix<S>& w) {
    const int n = w.size();
    SymmetricMatrix<S> t = apply_grsk_symmetric(w);
    S lhs(1);
    for (int k = 0; k < n / 2; ++k) lhs *= S(4);
    for (int i = 1; i <= n; ++i) lhs *= w(i, i);
    S num(1), den(1);
    for (int d = n; d >= 1; d -= 2) num *= t(d, d);
    for (int d = n - 1; d >= 1; d -= 2) den *= t(d, d);
    return lhs * den == num;
}

/// Log-Jacobian on the n(n+1)/2 independent upper-triangle coordinates.
inline Rational log_jacobian_det_symmetric(const SymmetricMatrix<Rational>& w) {
    const int n = w.size();
    auto coord_map = [n](const std::vector<DualRational>& in) {
        SymmetricMatrix<DualRational> wd(n, in);
        return apply_grsk_symmetric(wd).upper();
    };
    return log_jacobian_det_coords(coord_map, w.upper());
}

}  // namespace grsk
