#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

namespace grsk {

/// Dense rectangular grid of scalars with the 1-based (i,j) indexing used
/// throughout the maps.  Row-major storage.
template <class S>
class Matrix {
public:
    Matrix() : n_(0), m_(0) {}
    Matrix(int rows, int cols) : n_(rows), m_(cols), e_(size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
    }
    Matrix(int rows, int cols, const S& fill)
        : n_(rows), m_(cols), e_(size_t(rows) * cols, fill) {}

    int rows() const { return n_; }
    int cols() const { return m_; }

    S& operator()(int i, int j) {
        assert(i >= 1 && i <= n_ && j >= 1 && j <= m_);
        return e_[size_t(i - 1) * m_ + (j - 1)];
    }
    const S& operator()(int i, int j) const {
        assert(i >= 1 && i <= n_ && j >= 1 && j <= m_);
        return e_[size_t(i - 1) * m_ + (j - 1)];
    }

    Matrix transposed() const {
        Matrix t(m_, n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= m_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class T, class F>
    Matrix<T> map(F f) const {
        Matrix<T> out(n_, m_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= m_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int n_, m_;
    std::vector<S> e_;
};

/// Throws unless every entry is strictly positive (precondition of all the
/// birational maps).
template <class S>
void require_positive(const Matrix<S>& x, const char* what = "matrix") {
    for (int i = 1; i <= x.rows(); ++i)
        for (int j = 1; j <= x.cols(); ++j)
            if (!(x(i, j) > S(0)))
                throw std::domain_error(std::string(what) + ": entries must be strictly positive");
}

}  // namespace grsk
