#include "supertime/numerics.hpp"

#include <numbers>

#include "supertime/errors.hpp"

namespace supertime::numerics {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw InvalidInput("Gauss-Legendre rule needs at least one node");
  GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
      }
      derivative = n * (x * p0 - p1) / (x * x - 1.0);
      const double step = p0 / derivative;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double sine_integral(double x) {
  if (x < 0.0) return -sine_integral(-x);
  if (x == 0.0) return 0.0;
  if (x <= 4.0) {
    // Alternating power series; terms peak near 4^k/k! so cancellation stays mild.
    double term = x;
    double sum = x;
    for (int k = 1; k < 60; ++k) {
      term *= -x * x / ((2.0 * k) * (2.0 * k + 1.0));
      const double contribution = term / (2.0 * k + 1.0);
      sum += contribution;
      if (std::abs(contribution) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
  }
  // Continued fraction for E1(i x) evaluated with the modified Lentz method.
  using cd = std::complex<double>;
  constexpr double tiny = 1e-300;
  cd b(1.0, x);
  cd c(1.0 / tiny, 0.0);
  cd d = 1.0 / b;
  cd h = d;
  for (int i = 2; i < 1000; ++i) {
    const double a = -static_cast<double>((i - 1) * (i - 1));
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cd delta = c * d;
    h *= delta;
    if (std::abs(delta.real() - 1.0) + std::abs(delta.imag()) < 1e-16) break;
  }
  h *= cd(std::cos(x), -std::sin(x));
  return 0.5 * std::numbers::pi + h.imag();
}

Maximum maximize_unimodal(const std::function<double(double)>& f,
                          const std::function<double(double)>& derivative, double lo, double hi,
                          double tol) {
  if (!(hi > lo)) throw InvalidInput("maximize_unimodal: empty bracket");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > 1e-4 * (hi - lo)) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  // The golden-section bracket [a, b] contains the maximiser; a stationary
  // point strictly inside is pinned by derivative bisection. If the
  // derivative does not change sign the maximum sits at a bracket end.
  const double da = derivative(a);
  const double db = derivative(b);
  if (da > 0.0 && db < 0.0) {
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      if (derivative(mid) > 0.0) {
        a = mid;
      } else {
        b = mid;
      }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
  }
  const double x = f(a) >= f(b) ? a : b;
  return {x, f(x)};
}

}  // namespace supertime::numerics
