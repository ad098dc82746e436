#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "grsk/local_moves.hpp"
#include "grsk/matrix.hpp"
#include "grsk/pattern.hpp"
#include "grsk/paths.hpp"

namespace grsk {

/// Max-plus local move: interior (a,b;c,d) -> (b^c - a, b; c, d + bvc),
/// additive boundary updates, identity at (1,1).
template <class S>
void tropical_move_inplace(Matrix<S>& y, int i, int j) {
    detail::check_move_index(i, j, y.rows(), y.cols());
    if (i == 1 && j == 1) return;
    if (i == 1) {
        y(1, j) = y(1, j - 1) + y(1, j);
        return;
    }
    if (j == 1) {
        y(i, 1) = y(i - 1, 1) + y(i, 1);
        return;
    }
    const S a = y(i - 1, j - 1), b = y(i - 1, j), c = y(i, j - 1), d = y(i, j);
    y(i - 1, j - 1) = std::min(b, c) - a;
    y(i, j) = d + std::max(b, c);
}

template <class S>
void tropical_move_inverse_inplace(Matrix<S>& y, int i, int j) {
    detail::check_move_index(i, j, y.rows(), y.cols());
    if (i == 1 && j == 1) return;
    if (i == 1) {
        y(1, j) = y(1, j) - y(1, j - 1);
        return;
    }
    if (j == 1) {
        y(i, 1) = y(i, 1) - y(i - 1, 1);
        return;
    }
    const S a = y(i - 1, j - 1), b = y(i - 1, j), c = y(i, j - 1), d = y(i, j);
    y(i - 1, j - 1) = std::min(b, c) - a;
    y(i, j) = d - std::max(b, c);
}

template <class S>
Matrix<S> tropical_local_move(Matrix<S> y, int i, int j) {
    tropical_move_inplace(y, i, j);
    return y;
}

template <class S>
Matrix<S> tropical_local_move_inverse(Matrix<S> y, int i, int j) {
    tropical_move_inverse_inplace(y, i, j);
    return y;
}

/// The max-plus correspondence U, same move order as the geometric map.
template <class S>
Matrix<S> apply_tropical(Matrix<S> y) {
    for (auto [i, j] : grsk_sequence(y.rows(), y.cols())) tropical_move_inplace(y, i, j);
    return y;
}

template <class S>
Matrix<S> invert_tropical(Matrix<S> u) {
    auto seq = grsk_sequence(u.rows(), u.cols());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        tropical_move_inverse_inplace(u, it->first, it->second);
    return u;
}

/// Brute-force max over r-tuples of vertex-disjoint paths of the entry sum.
template <class S>
S last_passage_oracle(const Matrix<S>& y, int k, int r) {
    const int n = y.rows(), m = y.cols();
    if (n + m > kPathOracleMaxSize)
        throw std::invalid_argument("last passage oracle: size guard exceeded (n+m > 14)");
    if (k < 1 || k > m || r < 1 || r > std::min(n, k))
        throw std::out_of_range("last passage oracle: invalid (k,r)");
    std::vector<std::pair<int, int>> starts, ends;
    for (int s = 1; s <= r; ++s) {
        starts.push_back({1, s});
        ends.push_back({n, k - r + s});
    }
    auto tuples = rectangular_paths(n, m).disjoint_tuples(starts, ends);
    if (tuples.empty()) throw std::logic_error("last passage oracle: no admissible tuple");
    bool first = true;
    S best{};
    for (uint64_t mask : tuples) {
        S sum{};
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= m; ++j)
                if (mask & (uint64_t(1) << ((i - 1) * m + (j - 1)))) sum = sum + y(i, j);
        if (first || best < sum) best = sum;
        first = false;
    }
    return best;
}

/// Greene-type identity: u_{n-r+1,k-r+1} + ... + u_{nk} equals the max-plus
/// oracle value.
template <class S>
bool check_tropical_path_identity(const Matrix<S>& y, int k, int r) {
    Matrix<S> u = apply_tropical(y);
    S sum{};
    for (int q = 0; q < r; ++q) sum = sum + u(u.rows() - q, k - q);
    return sum == last_passage_oracle(y, k, r);
}

/// Generalized Gelfand-Tsetlin test: top full-width entry non-negative and
/// r_{i+1,j+1} <= r_ij <= r_{i+1,j} with r_{i+1,width+1} = 0.
template <class S>
bool is_gelfand_tsetlin(const Pattern<S>& p) {
    const int h = p.height(), w = p.width();
    if (p(w, w) < S(0)) return false;
    for (int i = 1; i < h; ++i)
        for (int j = 1; j <= p.row_len(i); ++j) {
            S lower = (j == w) ? S(0) : p(i + 1, j + 1);
            if (!(lower <= p(i, j) && p(i, j) <= p(i + 1, j))) return false;
        }
    return true;
}

struct GtMembership {
    bool all_nonnegative;
    bool both_patterns_gt;
    bool equivalent() const { return all_nonnegative == both_patterns_gt; }
};

/// Checks the equivalence (all entries >= 0) <=> (both output patterns GT).
template <class S>
GtMembership gt_membership_check(const Matrix<S>& y) {
    GtMembership r{true, false};
    for (int i = 1; i <= y.rows() && r.all_nonnegative; ++i)
        for (int j = 1; j <= y.cols(); ++j)
            if (y(i, j) < S(0)) {
                r.all_nonnegative = false;
                break;
            }
    Matrix<S> u = apply_tropical(y);
    r.both_patterns_gt =
        is_gelfand_tsetlin(p_pattern_from_matrix(u)) && is_gelfand_tsetlin(q_pattern_from_matrix(u));
    return r;
}

/// Positive number carried by its logarithm; all four map operations stay in
/// the log domain, so exp(y/eps) never overflows.
struct LogNum {
    double lg = 0.0;  // represents exp(lg)

    LogNum() = default;
    LogNum(int c) : lg(std::log(double(c))) {  // NOLINT
        if (c <= 0) throw std::domain_error("log-domain scalar: non-positive constant");
    }
    static LogNum from_log(double l) {
        LogNum x;
        x.lg = l;
        return x;
    }
    friend LogNum operator*(LogNum a, LogNum b) { return from_log(a.lg + b.lg); }
    friend LogNum operator/(LogNum a, LogNum b) { return from_log(a.lg - b.lg); }
    friend LogNum operator+(LogNum a, LogNum b) {
        double hi = std::max(a.lg, b.lg), lo = std::min(a.lg, b.lg);
        return from_log(hi + std::log1p(std::exp(lo - hi)));
    }
};

/// log T(exp(L)) computed entirely in the log domain.
inline Matrix<double> grsk_log_domain(const Matrix<double>& log_entries) {
    Matrix<LogNum> x(log_entries.rows(), log_entries.cols());
    for (int i = 1; i <= log_entries.rows(); ++i)
        for (int j = 1; j <= log_entries.cols(); ++j) x(i, j) = LogNum::from_log(log_entries(i, j));
    Matrix<LogNum> t = apply_grsk(x);
    return t.map<double>([](const LogNum& v) { return v.lg; });
}

struct TropicalLimitReport {
    std::vector<double> eps;
    std::vector<double> max_error;  // max entrywise |eps log T(e^{Y/eps}) - U(Y)|
    bool decreasing = false;
};

/// eps log T(e^{Y/eps}) -> U(Y) entrywise as eps -> 0.
inline TropicalLimitReport tropicalization_limit_check(const Matrix<double>& y,
                                                       const std::vector<double>& eps_list) {
    TropicalLimitReport rep;
    Matrix<double> u = apply_tropical(y);
    for (double eps : eps_list) {
        Matrix<double> scaled = y.map<double>([eps](double v) { return v / eps; });
        Matrix<double> log_t = grsk_log_domain(scaled);
        double worst = 0.0;
        for (int i = 1; i <= y.rows(); ++i)
            for (int j = 1; j <= y.cols(); ++j)
                worst = std::max(worst, std::abs(eps * log_t(i, j) - u(i, j)));
        rep.eps.push_back(eps);
        rep.max_error.push_back(worst);
    }
    rep.decreasing = true;
    for (size_t k = 0; k + 1 < rep.max_error.size(); ++k)
        if (!(rep.max_error[k + 1] <= rep.max_error[k] * 1.02 + 1e-12)) rep.decreasing = false;
    return rep;
}

/// J function in the determinant case h = n:
/// det(exp(-lambda_i x_j)) / prod_{i>j}(lambda_i - lambda_j).
std::complex<double> j_function(const std::vector<std::complex<double>>& lambda,
                                const std::vector<double>& x);

struct CauchyReport {
    std::complex<double> lhs;
    std::complex<double> rhs;
    double rel_error;
    bool pass;
};

/// Integrates J_nu(x) J_lambda(x) over the cone x_1 >= x_2 >= 0 (n = m = 2 or
/// the half-line for n = m = 1) and compares with prod (nu_i + lambda_j)^{-1}.
CauchyReport tropical_cauchy_check(const std::vector<std::complex<double>>& nu,
                                   const std::vector<std::complex<double>>& lambda,
                                   double rel_tol = 1e-6);

struct LaguerreReport {
    double ks_distance;
    double mean_empirical;
    double mean_reference;
    double mean_z;  // |empirical - reference| / SE
    size_t samples;
    uint64_t seed;
    bool pass;
};

/// Exponential last-passage u_22 against the first marginal of the
/// 2x2 ensemble with density prop. to prod(a_i+b_j) J_a(x) J_b(x) on the cone.
LaguerreReport laguerre_marginal_check(const std::vector<double>& a, const std::vector<double>& b,
                                       size_t samples, uint64_t seed, double ks_threshold = 0.01);

}  // namespace grsk
