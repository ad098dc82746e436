#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "grsk/jacobian.hpp"
#include "grsk/local_moves.hpp"
#include "grsk/matrix.hpp"
#include "grsk/paths.hpp"

namespace grsk {

/// Strictly lower-triangular array x_{ij}, 1 <= j < i <= n.
template <class S>
class TriangularArray {
public:
    TriangularArray() : n_(0) {}
    explicit TriangularArray(int n) : n_(n), e_(size_t(n) * (n - 1) / 2) {
        if (n < 2) throw std::invalid_argument("triangular array: need n >= 2");
    }
    TriangularArray(int n, std::vector<S> entries) : n_(n), e_(std::move(entries)) {
        if (n < 2 || e_.size() != size_t(n) * (n - 1) / 2)
            throw std::invalid_argument("triangular array: wrong entry count");
    }

    int size() const { return n_; }
    const std::vector<S>& entries() const { return e_; }

    S& operator()(int i, int j) { return e_[index(i, j)]; }
    const S& operator()(int i, int j) const { return e_[index(i, j)]; }

    friend bool operator==(const TriangularArray& a, const TriangularArray& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

private:
    size_t index(int i, int j) const {
        if (j < 1 || j >= i || i > n_) throw std::out_of_range("triangular array: index");
        return size_t(i - 2) * (i - 1) / 2 + (j - 1);
    }
    int n_;
    std::vector<S> e_;
};

namespace detail {

/// Local move on a triangular array; all referenced cells stay strictly
/// below the diagonal for the sweeps used by the triangular map.
template <class S>
void tri_local_move(TriangularArray<S>& x, int i, int j) {
    if (j == 1) {
        x(i, 1) = x(i - 1, 1) * x(i, 1);
        return;
    }
    const S a = x(i - 1, j - 1), b = x(i - 1, j), c = x(i, j - 1), d = x(i, j);
    x(i - 1, j - 1) = (b * c) / (a * b + a * c);
    x(i, j) = d * (b + c);
}

/// Modified last sweep: reciprocal of the corner entry followed by the
/// alternating subdiagonal updates.  Entries (i,i-1) change only when n-i is
/// even; the update reads x_{i+1,i-1} and x_{i,i-2} with the conventions
/// x_{n+1,n-1} = x_{i,0} = 1.
template <class S>
void tri_last_sweep(TriangularArray<S>& x, int n) {
    x(n, n - 1) = S(1) / x(n, n - 1);
    for (int i = n; i >= 2; --i) {
        if ((n - i) % 2 != 0) continue;  // identity on odd offsets
        S below = (i == n) ? S(1) : x(i + 1, i - 1);
        S left = (i == 2) ? S(1) : x(i, i - 2);
        x(i, i - 1) = below * left / x(i, i - 1);
    }
}

/// rho^{tri,n}_j: the plain diagonal sweep for j <= n-2, the modified sweep
/// for j = n-1.
template <class S>
void tri_rho(TriangularArray<S>& x, int n, int j) {
    if (j <= n - 2) {
        for (int q = 0; q < j; ++q) tri_local_move(x, n - q, j - q);
    } else {
        tri_last_sweep(x, n);
    }
}

}  // namespace detail

/// Triangular geometric RSK: T_2 is the identity; for s = 3..n the s-th row
/// is inserted by the sweeps rho^{tri,s}_1, ..., rho^{tri,s}_{s-1}.
template <class S>
TriangularArray<S> apply_grsk_triangular(TriangularArray<S> x) {
    const int n = x.size();
    for (int s = 3; s <= n; ++s)
        for (int j = 1; j <= s - 1; ++j) detail::tri_rho(x, s, j);
    return x;
}

/// E^tri(X) = 1/x_21 + sum_{j<i} (x_{i-1,j} + x_{i,j-1}) / x_ij with
/// diagonal and j=0 neighbours counting as zero.
template <class S>
S energy_triangular(const TriangularArray<S>& x) {
    S total = S(1) / x(2, 1);
    for (int i = 2; i <= x.size(); ++i)
        for (int j = 1; j < i; ++j) {
            if (j <= i - 2) total += x(i - 1, j) / x(i, j);
            if (j >= 2) total += x(i, j - 1) / x(i, j);
        }
    return total;
}

/// E^tri(T(W)) == sum of reciprocal weights, exactly.
template <class S>
bool check_triangular_identity(const TriangularArray<S>& w) {
    S rhs(0);
    for (int i = 2; i <= w.size(); ++i)
        for (int j = 1; j < i; ++j) rhs += S(1) / w(i, j);
    return energy_triangular(apply_grsk_triangular(w)) == rhs;
}

inline Rational log_jacobian_det_triangular(const TriangularArray<Rational>& w) {
    const int n = w.size();
    auto coord_map = [n](const std::vector<DualRational>& in) {
        TriangularArray<DualRational> x(n, in);
        return apply_grsk_triangular(x).entries();
    };
    return log_jacobian_det_coords(coord_map, w.entries());
}

constexpr int kBelowWallOracleMaxSize = 10;

inline PathEnumerator below_wall_paths(int n) {
    PathEnumerator pe;
    pe.cell_id = [n](int i, int j) {
        if (j < 1 || j >= i || i > n) return -1;
        return (i - 2) * (i - 1) / 2 + (j - 1);
    };
    return pe;
}

/// Brute-force partition function z_r: r-tuples of vertex-disjoint paths from
/// (2,1),...,(r+1,r) to (n,n-1),...,(n-r+1,n-r) staying strictly below the
/// diagonal.
template <class S>
S below_wall_partition_oracle(const TriangularArray<S>& w, int r) {
    const int n = w.size();
    if (n > kBelowWallOracleMaxSize)
        throw std::invalid_argument("below-wall oracle: size guard exceeded (n > 10)");
    if (r < 1 || r > n / 2) throw std::out_of_range("below-wall oracle: invalid r");
    std::vector<std::pair<int, int>> starts, ends;
    for (int k = 1; k <= r; ++k) {
        starts.push_back({k + 1, k});
        ends.push_back({n - k + 1, n - k});
    }
    auto tuples = below_wall_paths(n).disjoint_tuples(starts, ends);
    S total(0);
    for (uint64_t mask : tuples) {
        S prod(1);
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j)
                if (mask & (uint64_t(1) << ((i - 2) * (i - 1) / 2 + (j - 1)))) prod *= w(i, j);
        total += prod;
    }
    return total;
}

/// Shape vector (t_{n,n-1}, t_{n-1,n-2}, ..., t_{21}) of the output array.
template <class S>
std::vector<S> shape_triangular(const TriangularArray<S>& t) {
    std::vector<S> out;
    for (int i = t.size(); i >= 2; --i) out.push_back(t(i, i - 1));
    return out;
}

/// Odd shape coordinates against partition-function ratios:
/// (t_{n,n-1}, t_{n-2,n-3}, ...) == (z_1, z_2/z_1, ...), exactly.
template <class S>
bool check_shape_ratios(const TriangularArray<S>& w) {
    TriangularArray<S> t = apply_grsk_triangular(w);
    const int n = w.size();
    S z_prev(1);
    for (int k = 1; k <= n / 2; ++k) {
        S z_k = below_wall_partition_oracle(w, k);
        if (!(z_prev * t(n - 2 * (k - 1), n - 2 * (k - 1) - 1) == z_k)) return false;
        z_prev = z_k;
    }
    return true;
}

/// type_j(X) = D_nj / D_{n,j-1} with D_nj the product down the anti-diagonal
/// from (n,j).
template <class S>
std::vector<S> triangular_type(const TriangularArray<S>& x) {
    const int n = x.size();
    std::vector<S> tau;
    S d_prev(1);
    for (int j = 1; j <= n - 1; ++j) {
        S d(1);
        for (int q = 0; q < j; ++q) d *= x(n - q, j - q);
        tau.push_back(d / d_prev);
        d_prev = d;
    }
    return tau;
}

/// type_j(T(W)) == prod_{l<j} w_jl * prod_{k>j} w_kj, exactly.
template <class S>
bool check_triangular_type(const TriangularArray<S>& w) {
    auto tau = triangular_type(apply_grsk_triangular(w));
    for (int j = 1; j <= w.size() - 1; ++j) {
        S expected(1);
        for (int l = 1; l < j; ++l) expected *= w(j, l);
        for (int k = j + 1; k <= w.size(); ++k) expected *= w(k, j);
        if (!(tau[j - 1] == expected)) return false;
    }
    return true;
}

/// Scaling operator and collapsed diagonal of the epsilon embedding: the
/// symmetric matrix whose square-map image matches T(W^eps) to leading order.
inline Matrix<double> scaled_collapsed_output(const TriangularArray<double>& t_tri, double eps) {
    const int n = t_tri.size();
    Matrix<double> ref(n, n);
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) {
            ref(i, j) = eps * t_tri(i, j);
            ref(j, i) = ref(i, j);
        }
    for (int a = n; a >= 2; a -= 2) {
        ref(a, a) = 2.0 * eps * eps * t_tri(a, a - 1);
        ref(a - 1, a - 1) = 0.5 * t_tri(a, a - 1);
    }
    if (n % 2 == 1) ref(1, 1) = eps;  // collapsed corner value is 1
    return ref;
}

struct EpsilonEmbeddingReport {
    std::vector<double> eps;
    std::vector<double> max_rel_error;  // worst entrywise |ratio - 1| per eps
    bool superlinear = false;           // successive errors shrink faster than eps does
};

/// Embeds W as a symmetric matrix with eps on the diagonal and compares
/// T(W^eps) entrywise against the scaled collapsed output.
inline EpsilonEmbeddingReport epsilon_embedding_check(const TriangularArray<double>& w,
                                                      const std::vector<double>& eps_list) {
    const int n = w.size();
    TriangularArray<double> t_tri = apply_grsk_triangular(w);
    EpsilonEmbeddingReport rep;
    for (double eps : eps_list) {
        Matrix<double> w_eps(n, n);
        for (int i = 1; i <= n; ++i) w_eps(i, i) = eps;
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j) {
                w_eps(i, j) = w(i, j);
                w_eps(j, i) = w(i, j);
            }
        Matrix<double> t = apply_grsk(w_eps);
        Matrix<double> ref = scaled_collapsed_output(t_tri, eps);
        double worst = 0.0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (!std::isfinite(t(i, j)) || !std::isfinite(ref(i, j)))
                    throw std::range_error("epsilon embedding: overflow, reduce eps range");
                worst = std::max(worst, std::abs(t(i, j) / ref(i, j) - 1.0));
            }
        rep.eps.push_back(eps);
        rep.max_rel_error.push_back(worst);
    }
    rep.superlinear = true;
    for (size_t k = 0; k + 1 < rep.eps.size(); ++k) {
        double eps_ratio = rep.eps[k + 1] / rep.eps[k];
        if (!(rep.max_rel_error[k + 1] < rep.max_rel_error[k] * eps_ratio * 1.5))
            rep.superlinear = false;
    }
    return rep;
}

}  // namespace grsk
