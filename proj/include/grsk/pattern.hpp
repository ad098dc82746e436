#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "grsk/local_moves.hpp"
#include "grsk/matrix.hpp"

namespace grsk {

/// Trapezoidal array z_{ij}, 1 <= i <= h, 1 <= j <= i^w.  The bottom row is
/// the shape; row products give the type.
template <class S>
class Pattern {
public:
    Pattern() : h_(0), w_(0) {}
    Pattern(int height, int width) : h_(height), w_(width) {
        if (height < width || width < 1)
            throw std::invalid_argument("pattern: need height >= width >= 1");
        rows_.resize(height);
        for (int i = 1; i <= height; ++i) rows_[i - 1].resize(row_len(i));
    }

    int height() const { return h_; }
    int width() const { return w_; }
    int row_len(int i) const { return std::min(i, w_); }

    S& operator()(int i, int j) {
        check(i, j);
        return rows_[i - 1][j - 1];
    }
    const S& operator()(int i, int j) const {
        check(i, j);
        return rows_[i - 1][j - 1];
    }

    /// Bottom row as a vector: (z_{h1}, ..., z_{hw}).
    std::vector<S> shape() const { return rows_[h_ - 1]; }

    /// type(P)_i = rho_i / rho_{i-1} with rho_i the product of row i.
    std::vector<S> type() const {
        std::vector<S> tau;
        tau.reserve(h_);
        S prev(1);
        for (int i = 1; i <= h_; ++i) {
            S rho(1);
            for (int j = 1; j <= row_len(i); ++j) rho *= (*this)(i, j);
            tau.push_back(rho / prev);
            prev = rho;
        }
        return tau;
    }

    friend bool operator==(const Pattern& a, const Pattern& b) {
        return a.h_ == b.h_ && a.w_ == b.w_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Pattern& a, const Pattern& b) { return !(a == b); }

private:
    void check(int i, int j) const {
        if (i < 1 || i > h_ || j < 1 || j > row_len(i))
            throw std::out_of_range("pattern: index outside the trapezoid");
    }
    int h_, w_;
    std::vector<std::vector<S>> rows_;
};

template <class S>
struct PatternPair {
    Pattern<S> p;  // height m
    Pattern<S> q;  // height n
};

/// P^alpha = prod_i type_i^{alpha_i} for integer exponents.
template <class S>
S pattern_type_weight(const Pattern<S>& p, const std::vector<long>& alpha) {
    if (alpha.size() != size_t(p.height()))
        throw std::invalid_argument("pattern_type_weight: exponent length mismatch");
    auto tau = p.type();
    S out(1);
    for (size_t i = 0; i < alpha.size(); ++i) {
        long e = alpha[i];
        S base = tau[i];
        if (e < 0) {
            base = S(1) / base;
            e = -e;
        }
        for (long k = 0; k < e; ++k) out *= base;
    }
    return out;
}

/// F_s(P) = s/z_{ww} + sum_{(i,j)} (z_{i-1,j} + z_{i+1,j+1}) / z_{ij}, with
/// entries outside the trapezoid counting as zero.
template <class S>
S pattern_energy(const Pattern<S>& p, const S& s) {
    const int h = p.height(), w = p.width();
    S total = s / p(w, w);
    for (int i = 1; i <= h; ++i)
        for (int j = 1; j <= p.row_len(i); ++j) {
            S num(0);
            bool any = false;
            if (i - 1 >= 1 && j <= p.row_len(i - 1)) {
                num += p(i - 1, j);
                any = true;
            }
            if (i + 1 <= h && j + 1 <= p.row_len(i + 1)) {
                num += p(i + 1, j + 1);
                any = true;
            }
            if (any) total += num / p(i, j);
        }
    return total;
}

/// Reads the P pattern (height m) off the output matrix T:
/// z_{k,l} = t_{n-l+1, k-l+1}.
template <class S>
Pattern<S> p_pattern_from_matrix(const Matrix<S>& t) {
    const int n = t.rows(), m = t.cols();
    Pattern<S> p(m, std::min(n, m));
    for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= std::min(k, n); ++l) p(k, l) = t(n - l + 1, k - l + 1);
    return p;
}

/// Reads the Q pattern (height n) off T: z'_{s,l} = t_{s-l+1, m-l+1}.
template <class S>
Pattern<S> q_pattern_from_matrix(const Matrix<S>& t) {
    const int n = t.rows(), m = t.cols();
    Pattern<S> q(n, std::min(n, m));
    for (int s = 1; s <= n; ++s)
        for (int l = 1; l <= std::min(s, m); ++l) q(s, l) = t(s - l + 1, m - l + 1);
    return q;
}

/// Identification T = (P,Q); asserts the common shape.
template <class S>
PatternPair<S> patterns_from_matrix(const Matrix<S>& t) {
    PatternPair<S> pair{p_pattern_from_matrix(t), q_pattern_from_matrix(t)};
    if (pair.p.shape() != pair.q.shape())
        throw std::logic_error("patterns_from_matrix: shape mismatch");
    return pair;
}

/// Rebuilds the output matrix from an identified pair (P,Q).  Inverse of
/// patterns_from_matrix; the shared anti-diagonal must agree.
template <class S>
Matrix<S> matrix_from_patterns(const Pattern<S>& p, const Pattern<S>& q) {
    const int m = p.height(), n = q.height();
    Matrix<S> t(n, m);
    for (int s = 1; s <= n; ++s)
        for (int l = 1; l <= std::min(s, m); ++l) t(s - l + 1, m - l + 1) = q(s, l);
    for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= std::min(k, n); ++l) t(n - l + 1, k - l + 1) = p(k, l);
    return t;
}

/// One step of the row-insertion recursion: inserts a weight row into the
/// current P pattern (empty state = default Pattern) and returns the grown
/// pattern.  After inserting rows 1..n of W the result equals the P pattern
/// of T(W).
///
/// Column l is completed before the auxiliary quantities a_{.,l+1} are
/// formed, since those reference the freshly inserted entries of column l.
template <class S>
Pattern<S> row_insert(const Pattern<S>& state, const std::vector<S>& row) {
    const int m = int(row.size());
    if (m == 0) throw std::invalid_argument("row_insert: empty row");
    const bool empty = state.height() == 0;
    const int pw = empty ? 0 : state.width();
    if (!empty && state.height() != m)
        throw std::invalid_argument("row_insert: pattern height must equal row length");
    const int nw = std::min(pw + 1, m);

    Pattern<S> next(m, nw);
    Matrix<S> a(m, m);
    for (int k = 1; k <= m; ++k) a(k, 1) = row[k - 1];
    for (int l = 1; l <= std::min(pw, m); ++l) {
        for (int k = l; k <= m; ++k)
            next(k, l) = (k == l) ? a(k, l) * state(k, l)
                                  : a(k, l) * (state(k, l) + next(k - 1, l));
        if (l + 1 <= nw)
            for (int k = l; k <= m - 1; ++k)
                a(k + 1, l + 1) = a(k + 1, l) * (state(k + 1, l) * next(k, l)) /
                                  (next(k + 1, l) * state(k, l));
    }
    if (nw > pw) {
        // Newly opened column: z_{k,nw} = a_{nw,nw} ... a_{k,nw}.
        S run(1);
        for (int k = nw; k <= m; ++k) {
            run = run * a(k, nw);
            next(k, nw) = run;
        }
    }
    return next;
}

/// Builds the P pattern of T(W) by inserting the rows of W in order.
template <class S>
Pattern<S> noumi_yamada_pattern(const Matrix<S>& w) {
    Pattern<S> state;
    for (int i = 1; i <= w.rows(); ++i) {
        std::vector<S> row(w.cols());
        for (int j = 1; j <= w.cols(); ++j) row[j - 1] = w(i, j);
        state = row_insert(state, row);
    }
    return state;
}

}  // namespace grsk
