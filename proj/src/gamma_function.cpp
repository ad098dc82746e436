#include "grsk/gamma_function.hpp"

#include <cmath>

namespace grsk {

namespace {

// Lanczos coefficients, g = 7, 9 terms.
constexpr double kG = 7.0;
constexpr double kCoef[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};
const double kLogSqrtTwoPi = 0.91893853320467274178;

std::complex<double> lanczos_positive(std::complex<double> z) {
    // valid for Re z >= 0.5
    z -= 1.0;
    std::complex<double> a(kCoef[0], 0.0);
    for (int k = 1; k < 9; ++k) a += kCoef[k] / (z + double(k));
    std::complex<double> t = z + kG + 0.5;
    return kLogSqrtTwoPi + (z + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        const double pi = 3.14159265358979323846;
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    }
    return lanczos_positive(z);
}

std::complex<double> gamma_fn(std::complex<double> z) { return std::exp(log_gamma(z)); }

}  // namespace grsk
