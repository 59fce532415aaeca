#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace supertime {

struct Sample {
  double t;
  double y;
};

/// C1 piecewise-cubic Hermite interpolant of tabulated data, zero outside the
/// sampled range. Knot slopes come from a local five-point polynomial fit.
/// Fourier transforms are computed segment by segment, exactly for the
/// interpolating polynomial.
class PiecewiseCubic {
 public:
  PiecewiseCubic() = default;

  /// Requires at least `min_samples` strictly increasing abscissae.
  static PiecewiseCubic from_samples(std::vector<Sample> samples, std::size_t min_samples = 4);

  double t_first() const { return t_.front(); }
  double t_last() const { return t_.back(); }
  std::size_t size() const { return t_.size(); }

  double value(double t) const;
  double derivative(double t) const;
  double knot_slope(std::size_t i) const { return m_[i]; }
  void set_knot_slope(std::size_t i, double slope) { m_[i] = slope; }

  /// Exact integral of the interpolant.
  double integral() const;

  /// int y(t) exp(i w t) dt over the sampled range.
  std::complex<double> fourier(double omega) const;
  /// int y'(t) exp(i w t) dt over the sampled range.
  std::complex<double> fourier_derivative(double omega) const;

 private:
  struct Cubic {
    double c0, c1, c2, c3;  // in the local coordinate s = t - t_i
  };
  Cubic segment(std::size_t i) const;
  std::size_t locate(double t) const;
  template <class Poly>
  std::complex<double> transform(double omega, Poly&& coefficients) const;

  std::vector<double> t_;
  std::vector<double> y_;
  std::vector<double> m_;
};

}  // namespace supertime
