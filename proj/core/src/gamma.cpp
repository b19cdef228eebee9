#include "oscfl/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "oscfl/errors.hpp"

namespace oscfl {

namespace {

// Godfrey's Lanczos coefficients for g = 607/128, as documented in
// http://my.fit.edu/~gabdo/gamma.txt; measured relative deviation at the
// integers is a few units of 1e-16.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosC = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5,
    1.5808870322491248884e-4,   -2.1026444172410488319e-4,
    2.1743961811521264320e-4,   -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

Complex lanczos_right_half(Complex w) {
  // Gamma(w) for Re w >= 0.5.
  Complex x = kLanczosC[0];
  for (std::size_t k = 1; k < kLanczosC.size(); ++k) {
    x += kLanczosC[k] / (w - 1.0 + static_cast<double>(k));
  }
  const Complex t = w - 0.5 + kLanczosG;
  return std::sqrt(2.0 * std::numbers::pi) * std::exp((w - 0.5) * std::log(t) - t) * x;
}

}  // namespace

Complex complex_gamma(Complex w, double pole_eps) {
  if (w.real() < 0.5) {
    const double nearest = std::round(w.real());
    if (nearest <= 0.0 && std::abs(w - nearest) < pole_eps) {
      throw DomainError("complex_gamma: pole at nonpositive integer");
    }
    // Reflection: Gamma(w) = pi / (sin(pi w) Gamma(1 - w)).
    const Complex s = std::sin(std::numbers::pi * w);
    return std::numbers::pi / (s * lanczos_right_half(1.0 - w));
  }
  return lanczos_right_half(w);
}

Complex gamma_star(Complex w, double eps) {
  const double nearest = std::round(w.real());
  if (nearest <= 0.0 && std::abs(w - nearest) < eps) {
    const int k = static_cast<int>(-nearest);
    double harmonic = 0.0;
    for (int j = 1; j <= k; ++j) harmonic += 1.0 / j;
    double sign_over_fact = 1.0;
    for (int j = 1; j <= k; ++j) sign_over_fact /= -j;
    return Complex(sign_over_fact * (-euler_gamma + harmonic), 0.0);
  }
  return complex_gamma(w, eps);
}

}  // namespace oscfl
