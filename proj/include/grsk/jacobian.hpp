#pragma once

#include <functional>
#include <vector>

#include "grsk/determinant.hpp"
#include "grsk/dual.hpp"
#include "grsk/matrix.hpp"

namespace grsk {

/// Exact Jacobian determinant, in logarithmic coordinates, of a map given by
/// its action on dual-rational coordinate vectors.  The raw Jacobian J is
/// rescaled as diag(t)^{-1} J diag(w), which by the chain rule equals the
/// Jacobian of log(map(exp(.))) without ever leaving rational arithmetic.
inline Rational log_jacobian_det_coords(
    const std::function<std::vector<DualRational>(const std::vector<DualRational>&)>& map,
    const std::vector<Rational>& coords) {
    const size_t d = coords.size();
    std::vector<DualRational> out = map(dual_seed(coords));
    if (out.size() != d) throw std::logic_error("log_jacobian: map must preserve dimension");
    Matrix<Rational> j(int(d), int(d));
    for (size_t o = 0; o < d; ++o) {
        const Rational& t = out[o].value();
        for (size_t k = 0; k < d; ++k) j(int(o) + 1, int(k) + 1) = out[o].partial(k) * coords[k] / t;
    }
    return det_exact(j);
}

inline bool is_plus_minus_one(const Rational& r) { return r == Rational(1) || r == Rational(-1); }

/// Row-major flattening helpers for matrix-valued maps.
inline std::vector<Rational> flatten(const Matrix<Rational>& x) {
    std::vector<Rational> v;
    v.reserve(size_t(x.rows()) * x.cols());
    for (int i = 1; i <= x.rows(); ++i)
        for (int j = 1; j <= x.cols(); ++j) v.push_back(x(i, j));
    return v;
}

template <class S>
Matrix<S> unflatten(const std::vector<S>& v, int rows, int cols) {
    Matrix<S> x(rows, cols);
    size_t k = 0;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) x(i, j) = v[k++];
    return x;
}

template <class S>
std::vector<S> flatten_generic(const Matrix<S>& x) {
    std::vector<S> v;
    v.reserve(size_t(x.rows()) * x.cols());
    for (int i = 1; i <= x.rows(); ++i)
        for (int j = 1; j <= x.cols(); ++j) v.push_back(x(i, j));
    return v;
}

/// Log-Jacobian of a positive-matrix map on all n*m coordinates.
inline Rational log_jacobian_det(
    const std::function<Matrix<DualRational>(const Matrix<DualRational>&)>& map,
    const Matrix<Rational>& x) {
    const int n = x.rows(), m = x.cols();
    auto coord_map = [&](const std::vector<DualRational>& in) {
        return flatten_generic(map(unflatten(in, n, m)));
    };
    return log_jacobian_det_coords(coord_map, flatten(x));
}

}  // namespace grsk
