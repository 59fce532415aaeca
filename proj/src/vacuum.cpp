#include "supertime/vacuum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "supertime/errors.hpp"
#include "supertime/numerics.hpp"

namespace supertime {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double kBandTolerance = 1e-14;
constexpr int kMaxOctaves = 48;
constexpr int kStalledOctaves = 8;

}  // namespace

WindowFunction WindowFunction::gaussian(double width_T) {
  detail::require_positive(width_T, "window width T");
  WindowFunction w;
  w.shape_ = WindowShape::gaussian;
  w.width_ = width_T;
  return w;
}

WindowFunction WindowFunction::tabulated(std::vector<Sample> samples) {
  WindowFunction w;
  w.shape_ = WindowShape::tabulated;
  w.profile_ = PiecewiseCubic::from_samples(std::move(samples), 4);
  w.width_ = w.profile_.t_last() - w.profile_.t_first();
  const double norm = w.profile_.integral();
  if (!(std::abs(norm - 1.0) <= 1e-8)) {
    throw InvalidInput("window is not normalised: integral = " + std::to_string(norm));
  }
  return w;
}

double WindowFunction::value(double t) const {
  if (shape_ == WindowShape::tabulated) return profile_.value(t);
  return std::exp(-0.5 * t * t / (width_ * width_)) / (std::sqrt(2.0 * pi) * width_);
}

std::complex<double> window_fourier(const WindowFunction& window, double omega) {
  if (window.shape() == WindowShape::tabulated) return window.profile().fourier(omega);
  const double x = omega * window.width();
  return std::exp(-0.5 * x * x);
}

double averaged_variance(const WindowFunction& window, const PhysicalConstants& k) {
  // Integrate in u = w * width; |phi~|^2 w dw = |phi~|^2 u du / width^2.
  const double scale = window.width();
  const auto integrand = [&](double u) { return std::norm(window_fourier(window, u / scale)) * u; };
  numerics::QuadratureOptions opt;
  opt.rel_tol = 1e-13;

  // Bands of one period 2 pi in u keep the tabulated transforms well resolved.
  // Far in the tail the transform sits at its rounding floor, so each piece
  // only needs to be accurate relative to the running total.
  const auto band = [&](double a, double b, double running) {
    opt.abs_tol = 1e-3 * kBandTolerance * running;
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / (2.0 * pi))));
    const double h = (b - a) / pieces;
    double sum = 0.0;
    for (int i = 0; i < pieces; ++i) {
      sum += numerics::integrate(integrand, a + i * h, a + (i + 1) * h, opt).value;
    }
    return sum;
  };

  double total = band(0.0, 1.0, 0.0);
  double previous = total;
  int stalled = 0;
  for (int octave = 0; octave < kMaxOctaves; ++octave) {
    const double a = std::ldexp(1.0, octave);
    const double contribution = band(a, 2.0 * a, total);
    total += contribution;
    if (contribution <= kBandTolerance * total) {
      const double u_scale = 1.0 / (scale * scale);
      const double natural_scale =
          u_scale * std::pow(natural_unit(Dimension::time, k), 2);
      return total * natural_scale / (2.0 * pi * pi);
    }
    // A 1/u tail adds the same amount per octave; anything decaying slower
    // than 2^-1 per octave is not going to converge in double range.
    stalled = contribution > 0.5 * previous ? stalled + 1 : 0;
    if (stalled >= kStalledOctaves && octave > 4) {
      throw DivergenceError("averaged variance diverges: octave [" + std::to_string(a) + ", " +
                            std::to_string(2.0 * a) + "]/width contributes " +
                            std::to_string(contribution) + " after " +
                            std::to_string(stalled) + " non-decaying octaves (total " +
                            std::to_string(total) + ")");
    }
    previous = contribution;
  }
  throw DivergenceError("averaged variance did not converge within 2^48 / width");
}

double gaussian_averaged_variance(double width_T, const PhysicalConstants& k) {
  detail::require_positive(width_T, "window width T");
  const double T = to_natural({width_T, Dimension::time}, k);
  return 1.0 / (4.0 * pi * pi * T * T);
}

double instantaneous_variance(double cutoff_lambda, const PhysicalConstants& k) {
  detail::require_non_negative(cutoff_lambda, "cutoff");
  const double lambda = cutoff_lambda * natural_unit(Dimension::time, k);
  return lambda * lambda / (4.0 * pi * pi);
}

double momentum_error(double charge, const WindowFunction& window, const PhysicalConstants& k) {
  detail::require_positive(charge, "charge");
  const double q = to_natural({charge, Dimension::charge}, k);
  const double natural = q * std::sqrt(averaged_variance(window, k) / 3.0);
  return from_natural(natural, Dimension::momentum, k).value;
}

double momentum_error_natural(double charge_natural, double time_natural) {
  detail::require_positive(charge_natural, "charge");
  detail::require_positive(time_natural, "T");
  return charge_natural / (2.0 * pi * std::sqrt(3.0) * time_natural);
}

double momentum_error(double charge, double width_T, const PhysicalConstants& k) {
  const double natural = momentum_error_natural(to_natural({charge, Dimension::charge}, k),
                                                to_natural({width_T, Dimension::time}, k));
  return from_natural(natural, Dimension::momentum, k).value;
}

double min_measurement_time_prefactor() { return 1.0 / std::sqrt(3.0 * pi * pi * pi); }

double min_measurement_time(double charge, double d, const PhysicalConstants& k) {
  detail::require_positive(charge, "charge");
  detail::require_positive(d, "d");
  // q / (2 pi sqrt(3) T) = pi / d  =>  T = q d / (2 pi^2 sqrt(3)).
  const double q = to_natural({charge, Dimension::charge}, k);
  const double length = to_natural({d, Dimension::length}, k);
  const double T = q * length / (2.0 * pi * pi * std::sqrt(3.0));
  return from_natural(T, Dimension::time, k).value;
}

}  // namespace supertime
