#pragma once

#include <complex>

namespace oscfl {

using Complex = std::complex<double>;

inline constexpr double euler_gamma = 0.5772156649015328606065121;

/// Euler Gamma(w) for complex w, Lanczos approximation (g = 607/128, 15
/// coefficients) with the reflection formula for Re w < 1/2. Relative error
/// is below 1e-13 on the strip |Re w| <= 50, |Im w| <= 50 away from poles.
/// Throws DomainError when w is within pole_eps of a nonpositive integer;
/// overflows to an infinite value for very large |w|.
Complex complex_gamma(Complex w, double pole_eps = 1e-12);

/// Finite-part gamma: equals Gamma(w) off the nonpositive integers; at
/// w = -k it takes the Hadamard finite part value
///   (-1)^k / k! * (-euler_gamma + sum_{j=1..k} 1/j).
/// The finite-part branch triggers when w is within eps of a nonpositive
/// integer. Total on the complex plane.
Complex gamma_star(Complex w, double eps = 1e-12);

}  // namespace oscfl
