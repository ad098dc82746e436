#pragma once

#include <stdexcept>
#include <vector>

#include "grsk/rational.hpp"

namespace grsk {

/// Forward-mode dual number over Rational: a value together with a dense row
/// of exact partial derivatives with respect to the seeded input coordinates.
///
/// A default-constructed operand or one built from an integer carries an
/// empty partials vector, which stands for the zero gradient of any width.
class DualRational {
public:
    DualRational() : v_(0) {}
    DualRational(long c) : v_(c) {}  // NOLINT: constants enter generic code implicitly
    DualRational(int c) : v_(c) {}   // NOLINT
    explicit DualRational(Rational v) : v_(std::move(v)) {}
    DualRational(Rational v, std::vector<Rational> partials)
        : v_(std::move(v)), d_(std::move(partials)) {}

    const Rational& value() const { return v_; }
    const std::vector<Rational>& partials() const { return d_; }

    /// Partial with respect to coordinate k; tolerant of the constant encoding.
    Rational partial(size_t k) const { return k < d_.size() ? d_[k] : Rational(0); }

    bool is_positive() const { return v_.is_positive(); }

    friend DualRational operator+(const DualRational& a, const DualRational& b) {
        DualRational r(a.v_ + b.v_, combined(a.d_, b.d_,
            [](const Rational& x, const Rational& y) { return x + y; }));
        return r;
    }
    friend DualRational operator-(const DualRational& a, const DualRational& b) {
        return DualRational(a.v_ - b.v_, combined(a.d_, b.d_,
            [](const Rational& x, const Rational& y) { return x - y; }));
    }
    friend DualRational operator-(const DualRational& a) {
        std::vector<Rational> d(a.d_.size());
        for (size_t k = 0; k < d.size(); ++k) d[k] = -a.d_[k];
        return DualRational(-a.v_, std::move(d));
    }
    friend DualRational operator*(const DualRational& a, const DualRational& b) {
        // (x*y)' = x*y' + y*x'
        return DualRational(a.v_ * b.v_, combined(a.d_, b.d_,
            [&](const Rational& da, const Rational& db) { return da * b.v_ + db * a.v_; }));
    }
    friend DualRational operator/(const DualRational& a, const DualRational& b) {
        // (x/y)' = (x'*y - y'*x) / y^2
        Rational y2 = b.v_ * b.v_;
        return DualRational(a.v_ / b.v_, combined(a.d_, b.d_,
            [&](const Rational& da, const Rational& db) { return (da * b.v_ - db * a.v_) / y2; }));
    }

    DualRational& operator+=(const DualRational& o) { return *this = *this + o; }
    DualRational& operator-=(const DualRational& o) { return *this = *this - o; }
    DualRational& operator*=(const DualRational& o) { return *this = *this * o; }
    DualRational& operator/=(const DualRational& o) { return *this = *this / o; }

    // Comparisons look only at values; gradients are bookkeeping.
    friend bool operator==(const DualRational& a, const DualRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const DualRational& a, const DualRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const DualRational& a, const DualRational& b) { return a.v_ < b.v_; }
    friend bool operator>(const DualRational& a, const DualRational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const DualRational& a, const DualRational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const DualRational& a, const DualRational& b) { return a.v_ >= b.v_; }

private:
    template <class Op>
    static std::vector<Rational> combined(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b, Op op) {
        if (!a.empty() && !b.empty() && a.size() != b.size())
            throw std::logic_error("dual: mismatched partials widths");
        size_t n = std::max(a.size(), b.size());
        std::vector<Rational> out(n);
        Rational zero(0);
        for (size_t k = 0; k < n; ++k)
            out[k] = op(k < a.size() ? a[k] : zero, k < b.size() ? b[k] : zero);
        return out;
    }

    Rational v_;
    std::vector<Rational> d_;
};

/// Seeds coordinate k of `values` with the unit gradient e_k.
/// All values must be strictly positive.
inline std::vector<DualRational> dual_seed(const std::vector<Rational>& values) {
    std::vector<DualRational> out;
    out.reserve(values.size());
    for (size_t k = 0; k < values.size(); ++k) {
        if (!values[k].is_positive())
            throw std::domain_error("dual_seed: values must be strictly positive");
        std::vector<Rational> d(values.size(), Rational(0));
        d[k] = Rational(1);
        out.emplace_back(values[k], std::move(d));
    }
    return out;
}

}  // namespace grsk
