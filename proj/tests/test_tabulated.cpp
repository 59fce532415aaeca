#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "supertime/errors.hpp"
#include "supertime/numerics.hpp"
#include "supertime/tabulated.hpp"

using namespace supertime;

namespace {

double cubic(double t) { return 1.0 - 2.0 * t + 0.5 * t * t + 0.25 * t * t * t; }
double cubic_slope(double t) { return -2.0 + t + 0.75 * t * t; }

std::vector<Sample> sample(double (*f)(double), double a, double b, int n) {
  std::vector<Sample> s;
  for (int i = 0; i < n; ++i) {
    const double t = a + (b - a) * i / (n - 1);
    s.push_back({t, f(t)});
  }
  return s;
}

}  // namespace

TEST_CASE("cubics are reproduced exactly") {
  auto samples = sample(cubic, -1.0, 2.0, 9);
  samples[3].t += 0.07;  // uneven spacing
  samples[3].y = cubic(samples[3].t);
  const auto p = PiecewiseCubic::from_samples(samples);
  for (double t = -1.0; t <= 2.0; t += 0.0137) {
    CHECK(p.value(t) == doctest::Approx(cubic(t)).epsilon(1e-12));
    CHECK(p.derivative(t) == doctest::Approx(cubic_slope(t)).epsilon(1e-11));
  }
  const double exact = [] {
    auto F = [](double t) { return t - t * t + t * t * t / 6.0 + t * t * t * t / 16.0; };
    return F(2.0) - F(-1.0);
  }();
  CHECK(p.integral() == doctest::Approx(exact).epsilon(1e-13));
}

TEST_CASE("fourier transform of the interpolant matches quadrature") {
  const auto p = PiecewiseCubic::from_samples(
      sample([](double t) { return std::exp(-t * t); }, -4.0, 4.0, 81));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> omega(0.0, 30.0);
  for (int i = 0; i < 20; ++i) {
    const double w = omega(rng);
    numerics::QuadratureOptions opt;
    opt.rel_tol = 1e-13;
    opt.abs_tol = 1e-15;
    const auto ref = numerics::integrate_complex(
        [&](double t) { return p.value(t) * std::polar(1.0, w * t); }, -4.0, 4.0, opt);
    CHECK(std::abs(p.fourier(w) - ref) < 1e-10);
    const auto dref = numerics::integrate_complex(
        [&](double t) { return p.derivative(t) * std::polar(1.0, w * t); }, -4.0, 4.0, opt);
    CHECK(std::abs(p.fourier_derivative(w) - dref) < 1e-10);
  }
}

TEST_CASE("sample validation") {
  CHECK_THROWS_AS(PiecewiseCubic::from_samples({{0, 1}, {1, 2}}), InvalidInput);
  CHECK_THROWS_AS(PiecewiseCubic::from_samples({{0, 1}, {1, 2}, {1, 3}, {2, 0}}), InvalidInput);
  CHECK_THROWS_AS(PiecewiseCubic::from_samples(sample(cubic, 0, 1, 10), 16), InvalidInput);
}
