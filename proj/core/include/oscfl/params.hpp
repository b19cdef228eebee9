#pragma once

#include <complex>
#include <vector>

namespace oscfl {

using Complex = std::complex<double>;

/// Parameters of the family f_{alpha,beta}(t) = t^beta exp(i t^alpha).
/// alpha must be strictly greater than 1; beta is any complex number.
struct Params {
  double alpha;
  Complex beta;
  double kappa;           // 1/(alpha - 1), derived
  double eps_resonance;   // tolerance for resonance detection

  Params(double alpha_, Complex beta_, double eps_resonance_ = 1e-12);
};

/// A point z in polar form with the angle canonicalized to the window
/// (-pi - pi/alpha, pi - pi/alpha]. The window tiles exactly into the two
/// open sectors of the asymptotic case split plus their two boundary rays:
/// the positive real axis sits at angle 0 and the lower boundary ray
/// arg z = -pi - pi/alpha is represented canonically by pi - pi/alpha.
struct EvalPoint {
  Complex z;
  double radius;
  double angle;

  static EvalPoint from(Complex z, const Params& p);
};

/// Canonicalize an angle into (-pi - pi/alpha, pi - pi/alpha]. Idempotent.
double canonical_angle(double theta, double alpha);

/// A parameter coincidence beta + n*alpha + m + 1 = 0 (within eps_resonance).
/// Such pairs produce logarithmic terms and finite-part substitutions.
struct ResonancePair {
  int n = 0;
  int m = 0;
  friend bool operator==(const ResonancePair&, const ResonancePair&) = default;
};

/// All resonant pairs with n <= max_n, m <= max_m, sorted lexicographically.
std::vector<ResonancePair> resonances(const Params& p, int max_n, int max_m);

}  // namespace oscfl
