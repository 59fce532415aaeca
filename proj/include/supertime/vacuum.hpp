#pragma once

#include <complex>
#include <vector>

#include "supertime/tabulated.hpp"
#include "supertime/units.hpp"

namespace supertime {

enum class WindowShape { gaussian, tabulated };

/// Normalised time-averaging profile phi(t), int phi dt = 1.
class WindowFunction {
 public:
  /// exp(-t^2 / 2T^2) / (sqrt(2 pi) T).
  static WindowFunction gaussian(double width_T);
  /// Samples of (t [s], phi [1/s]); zero outside the sampled range. The
  /// interpolant must integrate to 1 within 1e-8.
  static WindowFunction tabulated(std::vector<Sample> samples);

  WindowShape shape() const { return shape_; }
  /// Gaussian width, or the sampled span for tabulated windows.
  double width() const { return width_; }
  double value(double t) const;

  const PiecewiseCubic& profile() const { return profile_; }

 private:
  WindowShape shape_ = WindowShape::gaussian;
  double width_ = 0.0;
  PiecewiseCubic profile_;
};

/// phi~(w) = int phi(t) exp(i w t) dt, w in rad/s.
std::complex<double> window_fourier(const WindowFunction& window, double omega);

/// Vacuum variance of the time-averaged vector potential,
/// (1 / 2 pi^2) int_0^inf |phi~(w)|^2 w dw, in natural units (1/time^2).
/// Integrated over octave bands until a band adds less than 1e-14 of the
/// running total; throws DivergenceError if the bands stop shrinking.
double averaged_variance(const WindowFunction& window, const PhysicalConstants& k = {});

/// 1 / (4 pi^2 T^2) in natural units.
double gaussian_averaged_variance(double width_T, const PhysicalConstants& k = {});

/// Instantaneous variance with a hard cutoff: (1 / 2 pi^2) Lambda^2 / 2.
/// Lambda in rad/s, result in natural units.
double instantaneous_variance(double cutoff_lambda, const PhysicalConstants& k = {});

/// Error on one momentum component, q sqrt(variance / 3), in kg m/s.
double momentum_error(double charge, const WindowFunction& window,
                      const PhysicalConstants& k = {});
/// Gaussian window of width T: q / (2 pi sqrt(3) T), in kg m/s.
double momentum_error(double charge, double width_T, const PhysicalConstants& k = {});

/// Natural-unit form of the Gaussian momentum error (q, T natural).
double momentum_error_natural(double charge_natural, double time_natural);

/// 1 / sqrt(3 pi^3).
double min_measurement_time_prefactor();

/// Averaging time at which momentum_error equals the fringe resolution
/// pi hbar / d: (1/sqrt(3 pi^3)) (q/q_P) d/c.
double min_measurement_time(double charge, double d, const PhysicalConstants& k = {});

}  // namespace supertime
