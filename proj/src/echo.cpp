#include "supertime/echo.hpp"

#include <cmath>
#include <numbers>

#include "supertime/errors.hpp"

namespace supertime {
namespace {

void require_dipole_regime(double d, double R) {
  detail::require_positive(d, "separation d");
  detail::require_positive(R, "distance R");
  if (!(d < kDipoleGate * R)) {
    throw ApproximationError("dipole approximation requires d < R/10 (d=" + std::to_string(d) +
                             ", R=" + std::to_string(R) + ")");
  }
}

// Axis components of the monopole forces from sources at +-d/2 transverse to R.
ForcePair transverse_pair(double coupling, double d, double R) {
  const double half = 0.5 * d;
  const double r3 = std::pow(R * R + half * half, 1.5);
  const double component = coupling * half / r3;
  return {component, -component, coupling * d / (R * R * R)};
}

}  // namespace

ForcePair force_difference_gravity(double mass_a, double mass_b, double d, double R,
                                   const PhysicalConstants& k) {
  detail::require_positive(mass_a, "mass_a");
  detail::require_positive(mass_b, "mass_b");
  require_dipole_regime(d, R);
  k.validate();
  return transverse_pair(k.G * mass_a * mass_b, d, R);
}

ForcePair force_difference_coulomb(double charge_a, double charge_b, double d, double R,
                                   const PhysicalConstants& k) {
  if (charge_a == 0.0 || charge_b == 0.0 || !std::isfinite(charge_a) || !std::isfinite(charge_b)) {
    throw InvalidInput("charges must be finite and non-zero");
  }
  require_dipole_regime(d, R);
  k.validate();
  return transverse_pair(charge_a * charge_b / (4.0 * std::numbers::pi * k.epsilon0), d, R);
}

double GaussianState::momentum_spread(const PhysicalConstants& k) const {
  detail::require_positive(sigma, "sigma");
  return k.hbar / (2.0 * sigma);
}

EchoResult echo_displacements(double delta_F, double mass_b, double F_sum, double t,
                              const PhysicalConstants& k) {
  detail::require_positive(mass_b, "mass_b");
  detail::require_non_negative(t, "t");
  EchoResult r;
  r.time = t;
  r.delta_x = delta_F * t * t / (2.0 * mass_b);
  r.delta_p = -delta_F * t;
  r.cubic_phase = delta_F * F_sum * t * t * t / (12.0 * mass_b * k.hbar);
  return r;
}

double echo_overlap(const GaussianState& state, const EchoResult& echo,
                    const PhysicalConstants& k) {
  detail::require_positive(state.sigma, "sigma");
  const double s = state.sigma;
  const double x_term = echo.delta_x * echo.delta_x / (8.0 * s * s);
  const double p_term = echo.delta_p * echo.delta_p * s * s / (2.0 * k.hbar * k.hbar);
  return std::exp(-(x_term + p_term));
}

std::complex<double> echo_amplitude(const GaussianState& state, const EchoResult& echo,
                                    const PhysicalConstants& k) {
  // <phi| exp(i(dx P - dp X)/hbar) |phi> = exp(i(dx p0 - dp x0)/hbar) * modulus.
  const double phase =
      (echo.delta_x * state.p0 - echo.delta_p * state.x0) / k.hbar + echo.cubic_phase;
  return std::polar(echo_overlap(state, echo, k), phase);
}

double entanglement_time(double delta_F, double mass_b, double sigma, const PhysicalConstants&) {
  if (delta_F == 0.0) throw InvalidInput("delta_F = 0: the branches never entangle the test particle");
  detail::require_positive(delta_F, "delta_F");
  detail::require_positive(mass_b, "mass_b");
  detail::require_positive(sigma, "sigma");
  return std::sqrt(2.0 * mass_b * sigma / delta_F);
}

double momentum_route_time(double delta_F, double sigma, const PhysicalConstants& k) {
  detail::require_positive(delta_F, "delta_F");
  detail::require_positive(sigma, "sigma");
  return k.hbar / (delta_F * sigma);
}

double trap_max_width(double mass_b, double delta_F, const PhysicalConstants& k) {
  detail::require_positive(mass_b, "mass_b");
  detail::require_positive(delta_F, "delta_F");
  return std::cbrt(k.hbar * k.hbar / (mass_b * delta_F));
}

double orthogonalization_time(double delta_F, double mass_b, double sigma, double threshold,
                              const PhysicalConstants& k) {
  detail::require_positive(delta_F, "delta_F");
  detail::require_positive(mass_b, "mass_b");
  detail::require_positive(sigma, "sigma");
  if (!(threshold > 0.0 && threshold < 1.0)) throw InvalidInput("threshold must lie in (0, 1)");
  // -ln(threshold) = a u^2 + b u with u = t^2.
  const double a = delta_F * delta_F / (32.0 * mass_b * mass_b * sigma * sigma);
  const double b = delta_F * delta_F * sigma * sigma / (2.0 * k.hbar * k.hbar);
  const double target = -std::log(threshold);
  const double u = 2.0 * target / (b + std::sqrt(b * b + 4.0 * a * target));
  return std::sqrt(u);
}

}  // namespace supertime
