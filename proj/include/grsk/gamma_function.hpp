#pragma once

#include <complex>

namespace grsk {

/// Principal-branch log-gamma for complex arguments (Lanczos approximation,
/// reflection for Re z < 1/2).  Relative accuracy around 1e-13.
std::complex<double> log_gamma(std::complex<double> z);

std::complex<double> gamma_fn(std::complex<double> z);

}  // namespace grsk
