#include "supertime/radiation.hpp"

#include <cmath>
#include <numbers>

#include "supertime/errors.hpp"
#include "supertime/numerics.hpp"

namespace supertime {
namespace {

constexpr double pi = std::numbers::pi;

// cos(u/2) / (1 - u^2/pi^2) for u >= 0.
double sin_squared_envelope(double u) {
  const double eps = u - pi;
  if (std::abs(eps) < 1e-4) {
    // pi^2 sin(eps/2) / (eps (2 pi + eps)), with sin(eps/2)/eps expanded.
    const double sinc_half = 0.5 - eps * eps / 48.0;
    return pi * pi * sinc_half / (2.0 * pi + eps);
  }
  return std::cos(0.5 * u) / (1.0 - u * u / (pi * pi));
}

constexpr int kTailPeriods = 200;

}  // namespace

TrajectoryProfile TrajectoryProfile::sin_squared(double d, double t0) {
  detail::require_non_negative(d, "d");
  detail::require_positive(t0, "t0");
  TrajectoryProfile p;
  p.shape_ = TrajectoryShape::sin_squared;
  p.d_ = d;
  p.t0_ = t0;
  return p;
}

TrajectoryProfile TrajectoryProfile::tabulated(std::vector<Sample> samples) {
  TrajectoryProfile p;
  p.shape_ = TrajectoryShape::tabulated;
  p.path_ = PiecewiseCubic::from_samples(std::move(samples), kMinTrajectorySamples);
  if (p.path_.t_first() != 0.0) throw InvalidInput("tabulated trajectory must start at t = 0");
  p.t0_ = p.path_.t_last();
  p.d_ = p.path_.value(p.t0_);
  detail::require_positive(p.d_, "net displacement x(t0)");
  const double x_tol = 1e-6 * p.d_;
  const double v_tol = 1e-6 * p.d_ / p.t0_;
  if (std::abs(p.path_.value(0.0)) > x_tol) {
    throw InvalidInput("tabulated trajectory must start at x = 0");
  }
  const std::size_t last = p.path_.size() - 1;
  if (std::abs(p.path_.knot_slope(0)) > v_tol || std::abs(p.path_.knot_slope(last)) > v_tol) {
    throw InvalidInput("tabulated trajectory must start and end at rest (|v| <= 1e-6 d/t0)");
  }
  p.path_.set_knot_slope(0, 0.0);
  p.path_.set_knot_slope(last, 0.0);
  return p;
}

double TrajectoryProfile::position(double t) const {
  if (shape_ == TrajectoryShape::tabulated) {
    if (t > t0_) return d_;
    return path_.value(t);
  }
  if (t <= 0.0) return 0.0;
  if (t >= t0_) return d_;
  const double s = std::sin(0.5 * pi * t / t0_);
  return d_ * s * s;
}

double TrajectoryProfile::velocity(double t) const {
  if (t <= 0.0 || t >= t0_) return 0.0;
  if (shape_ == TrajectoryShape::tabulated) return path_.derivative(t);
  return d_ * 0.5 * pi / t0_ * std::sin(pi * t / t0_);
}

double TrajectoryProfile::reduced_spectrum(double u) const {
  if (shape_ == TrajectoryShape::sin_squared) {
    const double g = sin_squared_envelope(std::abs(u));
    return g * g;
  }
  return std::norm(path_.fourier_derivative(u / t0_)) / (d_ * d_);
}

std::complex<double> velocity_fourier(const TrajectoryProfile& profile, double omega) {
  if (profile.shape() == TrajectoryShape::tabulated) {
    return profile.path_.fourier_derivative(omega);
  }
  const double u = omega * profile.t0();
  return std::polar(profile.d() * sin_squared_envelope(std::abs(u)), 0.5 * u);
}

double reduced_mode_integral(const TrajectoryProfile& profile) {
  const auto integrand = [&](double u) { return profile.reduced_spectrum(u) * u; };
  numerics::QuadratureOptions opt;
  opt.rel_tol = 1e-13;
  opt.abs_tol = 1e-17;
  const double period = 2.0 * pi;
  double total = 0.0;
  double last_chunk = 0.0;
  for (int j = 0; j < kTailPeriods; ++j) {
    last_chunk = numerics::integrate(integrand, j * period, (j + 1) * period, opt).value;
    total += last_chunk;
  }
  // Beyond U the period-averaged integrand behaves as A / u^3.
  const double U = kTailPeriods * period;
  const double L = U - period;
  const double amplitude = last_chunk / (0.5 / (L * L) - 0.5 / (U * U));
  return total + amplitude * 0.5 / (U * U);
}

double mode_integral(const TrajectoryProfile& profile, double charge,
                     const PhysicalConstants& k) {
  k.validate();
  if (!(profile.d() < kNonRelativisticGate * k.c * profile.t0())) {
    throw ApproximationError("relativistic regime: need d < c t0 / 3 (d=" +
                             std::to_string(profile.d()) + " m, c t0=" +
                             std::to_string(k.c * profile.t0()) + " m)");
  }
  if (!std::isfinite(charge)) throw InvalidInput("charge must be finite");
  if (charge == 0.0) return 0.0;
  const double q = to_natural({charge, Dimension::charge}, k);
  const double beta = to_natural({profile.d(), Dimension::length}, k) /
                      to_natural({profile.t0(), Dimension::time}, k);
  return q * q / (6.0 * pi * pi) * beta * beta * reduced_mode_integral(profile);
}

double sin_squared_exponent_constant() {
  return pi * (pi * numerics::sine_integral(pi) - 2.0) / 6.0;
}

double vacuum_overlap(const TrajectoryProfile& profile, double charge, const PhysicalConstants& k) {
  return std::exp(-mode_integral(profile, charge, k));
}

double min_radiationless_time(double charge, double d, const PhysicalConstants& k) {
  detail::require_positive(charge, "charge");
  detail::require_positive(d, "d");
  return std::sqrt(2.0) * charge / planck_scales(k).charge * d / k.c;
}

ModeGrid ModeGrid::composite_gauss_legendre(double omega_max, int panels, int nodes_per_panel) {
  detail::require_positive(omega_max, "omega_max");
  if (panels < 1 || nodes_per_panel < 1) throw InvalidInput("grid needs panels and nodes");
  const auto rule = numerics::gauss_legendre(nodes_per_panel);
  const double width = omega_max / panels;
  ModeGrid grid;
  grid.omega.reserve(static_cast<std::size_t>(panels) * nodes_per_panel);
  grid.weights.reserve(grid.omega.capacity());
  for (int p = 0; p < panels; ++p) {
    for (int q = 0; q < nodes_per_panel; ++q) {
      grid.omega.push_back(width * (p + 0.5 * (rule.nodes[q] + 1.0)));
      grid.weights.push_back(0.5 * width * rule.weights[q]);
    }
  }
  return grid;
}

void ModeGrid::validate() const {
  if (omega.empty() || omega.size() != weights.size()) {
    throw InvalidInput("mode grid needs matching, non-empty node and weight lists");
  }
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!(omega[i] > 0.0) || !(weights[i] > 0.0)) {
      throw InvalidInput("mode grid nodes and weights must be positive");
    }
    if (i > 0 && !(omega[i] > omega[i - 1])) {
      throw InvalidInput("mode grid nodes must be strictly increasing");
    }
  }
}

namespace {

void require_same_grid(const DisplacementFunction& f, const DisplacementFunction& g,
                       const ModeGrid& grid) {
  grid.validate();
  if (f.values.size() != grid.size() || g.values.size() != grid.size()) {
    throw InvalidInput("displacement functions live on different mode grids");
  }
}

// d^3k / (2 pi)^3 after the angular integral: k^2 dk / (2 pi^2), natural units.
double radial_weight(const ModeGrid& grid, std::size_t n, double time_unit) {
  const double w = grid.omega[n] * time_unit;
  return grid.weights[n] * time_unit * w * w / (2.0 * pi * pi);
}

}  // namespace

DisplacementFunction displacement_from_trajectory(const TrajectoryProfile& profile, double charge,
                                                  const ModeGrid& grid,
                                                  const PhysicalConstants& k) {
  grid.validate();
  const double time_unit = natural_unit(Dimension::time, k);
  const double length_unit = natural_unit(Dimension::length, k);
  const double q = to_natural({charge, Dimension::charge}, k);
  DisplacementFunction f = DisplacementFunction::zero(grid.size());
  const std::complex<double> prefactor(0.0, q * std::sqrt(2.0 / 3.0));
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const double w = grid.omega[n] * time_unit;
    const std::complex<double> v = velocity_fourier(profile, grid.omega[n]) / length_unit;
    f.values[n][0] = prefactor * v / std::sqrt(2.0 * w);
  }
  if (!(grid.omega.back() < k.c / (3.0 * profile.d()))) {
    f.long_wavelength_ok = false;
    f.warning = "grid extends beyond the long-wavelength limit w < c/(3d)";
  }
  return f;
}

std::complex<double> mode_inner_product(const DisplacementFunction& f,
                                        const DisplacementFunction& g, const ModeGrid& grid,
                                        const PhysicalConstants& k) {
  require_same_grid(f, g, grid);
  const double time_unit = natural_unit(Dimension::time, k);
  std::complex<double> total = 0.0;
  for (std::size_t n = 0; n < grid.size(); ++n) {
    std::complex<double> dot = 0.0;
    for (int i = 0; i < 3; ++i) dot += std::conj(f.values[n][i]) * g.values[n][i];
    total += radial_weight(grid, n, time_unit) * dot;
  }
  return total;
}

std::complex<double> coherent_amplitude(const DisplacementFunction& f,
                                        const DisplacementFunction& g, const ModeGrid& grid,
                                        const PhysicalConstants& k) {
  const double ff = mode_inner_product(f, f, grid, k).real();
  const double gg = mode_inner_product(g, g, grid, k).real();
  return std::exp(-0.5 * ff - 0.5 * gg + mode_inner_product(f, g, grid, k));
}

double coherent_overlap(const DisplacementFunction& f, const DisplacementFunction& g,
                        const ModeGrid& grid, const PhysicalConstants& k) {
  require_same_grid(f, g, grid);
  const double time_unit = natural_unit(Dimension::time, k);
  double distance = 0.0;
  for (std::size_t n = 0; n < grid.size(); ++n) {
    double diff = 0.0;
    for (int i = 0; i < 3; ++i) diff += std::norm(f.values[n][i] - g.values[n][i]);
    distance += radial_weight(grid, n, time_unit) * diff;
  }
  return std::exp(-distance);
}

Composition compose(const DisplacementFunction& f, const DisplacementFunction& g,
                    const ModeGrid& grid, const PhysicalConstants& k) {
  require_same_grid(f, g, grid);
  Composition out{DisplacementFunction::zero(grid.size()), 1.0};
  for (std::size_t n = 0; n < grid.size(); ++n) {
    for (int i = 0; i < 3; ++i) out.sum.values[n][i] = f.values[n][i] + g.values[n][i];
  }
  out.sum.long_wavelength_ok = f.long_wavelength_ok && g.long_wavelength_ok;
  // (1/2) int (f g* - f* g) = (1/2) (<g,f> - <f,g>), purely imaginary.
  const std::complex<double> fg = mode_inner_product(f, g, grid, k);
  out.phase = std::exp(0.5 * (std::conj(fg) - fg));
  return out;
}

}  // namespace supertime
