#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

namespace supertime::numerics {

struct QuadratureOptions {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_intervals = 20000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

namespace detail {

// 15-point Kronrod rule with its embedded 7-point Gauss rule.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel kronrod15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on a finite interval.
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |value|).
template <class F>
QuadratureResult integrate(const F& f, double a, double b, const QuadratureOptions& opt = {}) {
  if (a == b) return {0.0, 0.0, 0, true};
  std::priority_queue<detail::Panel> panels;
  panels.push(detail::kronrod15(f, a, b));
  double value = panels.top().value;
  double error = panels.top().error;
  while (error > std::max(opt.abs_tol, opt.rel_tol * std::abs(value))) {
    if (static_cast<int>(panels.size()) >= opt.max_intervals) {
      return {value, error, static_cast<int>(panels.size()), false};
    }
    const detail::Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const detail::Panel left = detail::kronrod15(f, worst.a, mid);
    const detail::Panel right = detail::kronrod15(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    if (std::abs(mid - worst.a) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(mid)) {
      return {value, error, static_cast<int>(panels.size()), false};
    }
  }
  // Re-sum to shed the drift of the running updates.
  value = 0.0;
  error = 0.0;
  const int count = static_cast<int>(panels.size());
  while (!panels.empty()) {
    value += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  return {value, error, count, true};
}

/// Complex-valued convenience wrapper: real and imaginary parts integrated separately.
template <class F>
std::complex<double> integrate_complex(const F& f, double a, double b,
                                       const QuadratureOptions& opt = {}) {
  const auto re = integrate([&](double x) { return std::real(f(x)); }, a, b, opt);
  const auto im = integrate([&](double x) { return std::imag(f(x)); }, a, b, opt);
  return {re.value, im.value};
}

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

/// Sine integral Si(x) = int_0^x sin(y)/y dy.
double sine_integral(double x);

struct Maximum {
  double argmax;
  double value;
};

/// Maximises a smooth unimodal function on [lo, hi]. Golden-section search
/// narrows the bracket, then bisection on the sign of the supplied derivative
/// resolves the stationary point to `tol` (the function value alone is too
/// flat near the optimum to locate it below ~sqrt(machine epsilon)).
Maximum maximize_unimodal(const std::function<double(double)>& f,
                          const std::function<double(double)>& derivative, double lo, double hi,
                          double tol = 1e-12);

}  // namespace supertime::numerics
