#include "supertime/tabulated.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "supertime/errors.hpp"
#include "supertime/numerics.hpp"

namespace supertime {
namespace {

// Derivative at ts[at] of the Lagrange polynomial through the points [lo, lo + n).
double lagrange_slope(const std::vector<double>& ts, const std::vector<double>& ys, std::size_t lo,
                      std::size_t n, std::size_t at) {
  const double x = ts[at];
  double slope = 0.0;
  for (std::size_t j = lo; j < lo + n; ++j) {
    // d/dx of the j-th basis polynomial, evaluated at a node.
    double basis_derivative = 0.0;
    if (j == at) {
      for (std::size_t m = lo; m < lo + n; ++m) {
        if (m != j) basis_derivative += 1.0 / (ts[j] - ts[m]);
      }
    } else {
      double numerator = 1.0;
      double denominator = 1.0;
      for (std::size_t m = lo; m < lo + n; ++m) {
        if (m == j) continue;
        denominator *= ts[j] - ts[m];
        if (m != at) numerator *= x - ts[m];
      }
      basis_derivative = numerator / denominator;
    }
    slope += ys[j] * basis_derivative;
  }
  return slope;
}

const numerics::GaussLegendreRule& segment_rule() {
  static const numerics::GaussLegendreRule rule = numerics::gauss_legendre(8);
  return rule;
}

}  // namespace

PiecewiseCubic PiecewiseCubic::from_samples(std::vector<Sample> samples, std::size_t min_samples) {
  if (samples.size() < std::max<std::size_t>(min_samples, 2)) {
    throw InvalidInput("tabulated profile needs at least " + std::to_string(min_samples) +
                       " samples, got " + std::to_string(samples.size()));
  }
  PiecewiseCubic p;
  p.t_.reserve(samples.size());
  p.y_.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i].t) || !std::isfinite(samples[i].y)) {
      throw InvalidInput("non-finite sample at row " + std::to_string(i));
    }
    if (i > 0 && !(samples[i].t > samples[i - 1].t)) {
      throw InvalidInput("sample abscissae must be strictly increasing (row " + std::to_string(i) +
                         ")");
    }
    p.t_.push_back(samples[i].t);
    p.y_.push_back(samples[i].y);
  }
  const std::size_t n = p.t_.size();
  const std::size_t window = std::min<std::size_t>(5, n);
  p.m_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t half = window / 2;
    std::size_t lo = i > half ? i - half : 0;
    lo = std::min(lo, n - window);
    p.m_[i] = lagrange_slope(p.t_, p.y_, lo, window, i);
  }
  return p;
}

PiecewiseCubic::Cubic PiecewiseCubic::segment(std::size_t i) const {
  const double h = t_[i + 1] - t_[i];
  const double secant = (y_[i + 1] - y_[i]) / h;
  return {y_[i], m_[i], (3.0 * secant - 2.0 * m_[i] - m_[i + 1]) / h,
          (m_[i] + m_[i + 1] - 2.0 * secant) / (h * h)};
}

std::size_t PiecewiseCubic::locate(double t) const {
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  const auto idx = static_cast<std::size_t>(std::distance(t_.begin(), it));
  return std::clamp<std::size_t>(idx == 0 ? 0 : idx - 1, 0, t_.size() - 2);
}

double PiecewiseCubic::value(double t) const {
  if (t < t_.front() || t > t_.back()) return 0.0;
  const std::size_t i = locate(t);
  const Cubic c = segment(i);
  const double s = t - t_[i];
  return c.c0 + s * (c.c1 + s * (c.c2 + s * c.c3));
}

double PiecewiseCubic::derivative(double t) const {
  if (t < t_.front() || t > t_.back()) return 0.0;
  const std::size_t i = locate(t);
  const Cubic c = segment(i);
  const double s = t - t_[i];
  return c.c1 + s * (2.0 * c.c2 + 3.0 * s * c.c3);
}

double PiecewiseCubic::integral() const {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
    const double h = t_[i + 1] - t_[i];
    total += 0.5 * h * (y_[i] + y_[i + 1]) + h * h * (m_[i] - m_[i + 1]) / 12.0;
  }
  return total;
}

// `coefficients(i)` returns the local polynomial (up to cubic) on segment i.
template <class Poly>
std::complex<double> PiecewiseCubic::transform(double omega, Poly&& coefficients) const {
  using cd = std::complex<double>;
  const auto& rule = segment_rule();
  cd total = 0.0;
  for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
    const double h = t_[i + 1] - t_[i];
    const std::array<double, 4> c = coefficients(i);
    const auto poly = [&](double s) { return c[0] + s * (c[1] + s * (c[2] + s * c[3])); };
    cd piece = 0.0;
    if (std::abs(omega) * h <= 1.0) {
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double s = 0.5 * h * (rule.nodes[q] + 1.0);
        piece += rule.weights[q] * poly(s) * std::polar(1.0, omega * s);
      }
      piece *= 0.5 * h;
    } else {
      // Repeated integration by parts terminates for a cubic:
      // int p e^{iws} = e^{iws} sum_j (-1)^j p^(j)(s) / (iw)^(j+1).
      const cd iw(0.0, omega);
      const auto antiderivative = [&](double s) {
        const double d0 = poly(s);
        const double d1 = c[1] + s * (2.0 * c[2] + 3.0 * s * c[3]);
        const double d2 = 2.0 * c[2] + 6.0 * s * c[3];
        const double d3 = 6.0 * c[3];
        const cd inv = 1.0 / iw;
        return std::polar(1.0, omega * s) * inv * (d0 - inv * (d1 - inv * (d2 - inv * d3)));
      };
      piece = antiderivative(h) - antiderivative(0.0);
    }
    total += std::polar(1.0, omega * t_[i]) * piece;
  }
  return total;
}

std::complex<double> PiecewiseCubic::fourier(double omega) const {
  return transform(omega, [this](std::size_t i) {
    const Cubic c = segment(i);
    return std::array<double, 4>{c.c0, c.c1, c.c2, c.c3};
  });
}

std::complex<double> PiecewiseCubic::fourier_derivative(double omega) const {
  return transform(omega, [this](std::size_t i) {
    const Cubic c = segment(i);
    return std::array<double, 4>{c.c1, 2.0 * c.c2, 3.0 * c.c3, 0.0};
  });
}

}  // namespace supertime
