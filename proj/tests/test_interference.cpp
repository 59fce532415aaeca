#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "supertime/errors.hpp"
#include "supertime/interference.hpp"
#include "supertime/numerics.hpp"
#include "supertime/radiation.hpp"

using namespace supertime;

namespace {

constexpr double pi = std::numbers::pi;
const PhysicalConstants k;

double integrate_density(const std::function<double(double)>& p, double spread) {
  numerics::QuadratureOptions opt;
  opt.rel_tol = 1e-13;
  opt.max_intervals = 200000;
  return numerics::integrate(p, -14.0 * spread, 14.0 * spread, opt).value;
}

}  // namespace

TEST_CASE("densities are non-negative and normalised") {
  for (auto packet : {SuperposedWavepacket{1.0, 20.0, 0.0}, SuperposedWavepacket{0.5, 1.0, 1.2},
                      SuperposedWavepacket{2.0, 0.0, 0.0}, SuperposedWavepacket{1.0, 3.0, 2.9}}) {
    const double s = packet.k_spread();
    CHECK(std::abs(integrate_density([&](double q) { return momentum_density_coherent(q, packet); }, s) - 1.0) < 1e-8);
    CHECK(std::abs(integrate_density([&](double q) { return momentum_density_mixed(q, packet); }, s) - 1.0) < 1e-8);
    for (double noise : {0.1, 1.0, 5.0}) {
      const double S = std::hypot(s, noise);
      for (auto h : {Hypothesis::coherent, Hypothesis::mixed}) {
        CHECK(std::abs(integrate_density([&](double q) { return noisy_density(q, packet, h, noise); }, S) - 1.0) < 1e-8);
      }
    }
    for (double q = -5 * s; q <= 5 * s; q += 0.01 * s) CHECK(momentum_density_coherent(q, packet) >= 0.0);
  }
}

TEST_CASE("fringes") {
  const SuperposedWavepacket p{1.0, 10.0, 0.4};
  const double k_dark = (pi + p.phase) / p.separation;
  CHECK(momentum_density_coherent(k_dark, p) < 1e-16);
  const double period = 2.0 * pi / p.separation;
  for (double q : {-0.3, 0.05, 0.21}) {
    const double a = momentum_density_coherent(q, p) / momentum_density_mixed(q, p);
    const double b = momentum_density_coherent(q + period, p) / momentum_density_mixed(q + period, p);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
  }
}

TEST_CASE("phase average of the coherent density is the mixed density") {
  const SuperposedWavepacket base{1.0, 20.0, 0.0};
  std::mt19937_64 rng(1);
  std::normal_distribution<double> kdist(0.0, 2.0 * base.k_spread());
  const int phases = 64;
  for (int i = 0; i < 100; ++i) {
    const double q = kdist(rng);
    double mean = 0.0;
    for (int j = 0; j < phases; ++j) {
      SuperposedWavepacket p = base;
      p.phase = 2.0 * pi * j / phases;
      mean += momentum_density_coherent(q, p) / phases;
    }
    CHECK(std::abs(mean - momentum_density_mixed(q, base)) < 1e-8);
  }
}

TEST_CASE("coinciding packets") {
  const SuperposedWavepacket p{1.5, 0.0, 0.0};
  for (double q : {-1.0, 0.0, 0.3}) {
    CHECK(momentum_density_coherent(q, p) == doctest::Approx(momentum_density_mixed(q, p)).epsilon(1e-14));
  }
  const SuperposedWavepacket cancel{1.0, 0.0, pi};
  CHECK_THROWS_AS(cancel.validate(), InvalidInput);
  CHECK_THROWS_AS((SuperposedWavepacket{0.0, 1.0, 0.0}.validate()), InvalidInput);
  CHECK_THROWS_AS((SuperposedWavepacket{1.0, -1.0, 0.0}.validate()), InvalidInput);
}

TEST_CASE("mixed density is log-concave") {
  const SuperposedWavepacket p{0.7, 5.0, 0.0};
  const double h = 0.01;
  for (double q = -3.0; q <= 3.0; q += 0.1) {
    const double second = std::log(momentum_density_mixed(q + h, p)) -
                          2.0 * std::log(momentum_density_mixed(q, p)) +
                          std::log(momentum_density_mixed(q - h, p));
    CHECK(second < 0.0);
  }
}

TEST_CASE("noisy coherent density is the convolution of the clean one") {
  const SuperposedWavepacket p{1.0, 6.0, 0.7};
  const double noise = 0.4;
  numerics::QuadratureOptions opt;
  opt.rel_tol = 1e-12;
  for (double q : {-1.1, 0.0, 0.37, 1.9}) {
    const double conv = numerics::integrate(
        [&](double x) {
          const double z = (q - x) / noise;
          return momentum_density_coherent(x, p) * std::exp(-0.5 * z * z) /
                 (std::sqrt(2.0 * pi) * noise);
        },
        -12.0, 12.0, opt).value;
    CHECK(noisy_density(q, p, Hypothesis::coherent, noise) == doctest::Approx(conv).epsilon(1e-8));
  }
  CHECK(noisy_density(0.3, p, Hypothesis::coherent, 0.0) ==
        doctest::Approx(momentum_density_coherent(0.3, p)).epsilon(1e-14));
}

TEST_CASE("required precision") {
  CHECK(required_precision(1.0, k) == doctest::Approx(3.3e-34).epsilon(5e-3));
  CHECK(required_precision(2.0, k) == doctest::Approx(0.5 * required_precision(1.0, k)));
  CHECK(required_precision_wavenumber(0.5) == doctest::Approx(2.0 * pi));
  CHECK_THROWS_AS(required_precision(0.0, k), InvalidInput);
}

TEST_CASE("sampling moments and determinism") {
  const SuperposedWavepacket p{0.8, 16.0, 0.0};
  const std::size_t n = 100000;
  const auto s = sample_momenta(p, Hypothesis::mixed, n, 0.0, 17);
  double mean = 0.0, var = 0.0;
  for (double x : s) mean += x / n;
  for (double x : s) var += (x - mean) * (x - mean) / (n - 1);
  const double s2 = p.k_spread() * p.k_spread();
  CHECK(std::abs(mean) < 4.0 * std::sqrt(s2 / n));
  CHECK(std::abs(var - s2) < 4.0 * s2 * std::sqrt(2.0 / n));
  CHECK(sample_momenta(p, Hypothesis::coherent, 1000, 0.3, 99) ==
        sample_momenta(p, Hypothesis::coherent, 1000, 0.3, 99));
  CHECK(sample_momenta(p, Hypothesis::coherent, 1000, 0.3, 99) !=
        sample_momenta(p, Hypothesis::coherent, 1000, 0.3, 100));
  CHECK_THROWS_AS(sample_momenta(p, Hypothesis::mixed, 0, 0.0, 1), InvalidInput);
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
}

TEST_CASE("coherent samples show fringes") {
  const SuperposedWavepacket p{1.0, 20.0, 0.0};
  const std::size_t n = 100000;
  const auto s = sample_momenta(p, Hypothesis::coherent, n, 0.0, 5);
  const double width = pi / (4.0 * p.separation);
  const double reach = p.k_spread();
  const int bins = static_cast<int>(2.0 * reach / width);
  std::vector<double> counts(bins, 0.0);
  for (double x : s) {
    const int b = static_cast<int>(std::floor((x + reach) / width));
    if (b >= 0 && b < bins) counts[b] += 1.0;
  }
  double hi = 0.0, lo = 1e300;
  for (int b = 0; b < bins; ++b) {
    const double center = -reach + (b + 0.5) * width;
    const double fringe = counts[b] / (n * width * momentum_density_mixed(center, p));
    hi = std::max(hi, fringe);
    lo = std::min(lo, fringe);
  }
  CHECK((hi - lo) / (hi + lo) > 0.9);
}

TEST_CASE("likelihood ratio") {
  const SuperposedWavepacket coinciding{1.0, 0.0, 0.3};
  const auto s = sample_momenta(coinciding, Hypothesis::coherent, 5000, 0.2, 3);
  CHECK(std::abs(discriminate(s, coinciding, 0.2).log_likelihood_ratio) < 1e-9);

  const SuperposedWavepacket p{1.0, 20.0, 0.0};
  const double dark = pi / p.separation;
  const double dark_sample[] = {dark};
  const auto clean = discriminate(dark_sample, p, 0.0);
  CHECK_FALSE(std::isnan(clean.log_likelihood_ratio));
  CHECK(clean.decision == Hypothesis::mixed);
  const auto tiny = discriminate(dark_sample, p, 1e-9);
  CHECK(std::isfinite(tiny.log_likelihood_ratio));
  CHECK(tiny.log_likelihood_ratio < -10.0);
  CHECK_THROWS_AS(discriminate(std::span<const double>{}, p, 0.0), InvalidInput);

  const auto coherent = sample_momenta(p, Hypothesis::coherent, 2000, 0.0, 11);
  CHECK(discriminate(coherent, p, 0.0).decision == Hypothesis::coherent);
  const auto mixed = sample_momenta(p, Hypothesis::mixed, 2000, 0.0, 11);
  CHECK(discriminate(mixed, p, 0.0).decision == Hypothesis::mixed);
}

TEST_CASE("power curve is reproducible") {
  const SuperposedWavepacket p{1.0, 20.0, 0.0};
  const double levels[] = {0.1 * pi / 20.0, 10.0 * pi / 20.0};
  const auto a = estimate_power_curve(p, levels, 500, 40, 123);
  const auto b = estimate_power_curve(p, levels, 500, 40, 123);
  CHECK(a.power == b.power);
  CHECK(a.power[0] == 1.0);
  for (double x : a.power) {
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
  }
  const auto r = estimate_power(p, levels[0], 500, 40, 123);
  CHECK(r.power_estimate == a.power[0]);
}

TEST_CASE("spin protocol") {
  const double qP = planck_scales(k).charge;
  const double q = 10.0 * qP, d = 1e-3;
  const double t_min = min_radiationless_time(q, d, k);

  const SpinOutcome slow = spin_protocol(q, d, 1e4 * t_min, false, 1.0, k);
  CHECK(slow.visibility > 0.9999);
  CHECK(slow.p_plus > 0.99995);
  CHECK(slow.p_plus + slow.p_minus == doctest::Approx(1.0));

  for (double t0 : {t_min, 10.0 * t_min, 1e3 * t_min}) {
    const SpinOutcome c = spin_protocol(q, d, t0, true, 1.0, k);
    CHECK(c.visibility == 0.0);
    CHECK(c.p_plus == doctest::Approx(0.5));
    CHECK(c.p_minus == doctest::Approx(0.5));
  }

  const double E = mode_integral(TrajectoryProfile::sin_squared(d, t_min), q, k);
  for (double kappa : {1.0, 2.0}) {
    CHECK(spin_protocol_visibility(q, d, t_min, kappa, k) ==
          doctest::Approx(std::exp(-kappa * E)).epsilon(1e-12));
    CHECK(spin_protocol_visibility(q, d, t_min, kappa, k) ==
          doctest::Approx(std::exp(-kappa)).epsilon(1e-3));
  }
  double prev = 0.0;
  for (double f = 1.0; f < 100.0; f *= 1.3) {
    const double v = spin_protocol_visibility(q, d, f * t_min, 1.0, k);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK_THROWS_AS(spin_protocol(q, d, t_min, false, 0.0, k), InvalidInput);
  CHECK_THROWS_AS(spin_protocol_visibility(qP, d, min_radiationless_time(qP, d, k), 1.0, k),
                  ApproximationError);
}

TEST_CASE("overwhelming noise leaves a coin flip") {
  for (double ratio : {20.0, 200.0}) {
    const SuperposedWavepacket p{1.0, ratio, 0.0};
    const double level[] = {10.0 * pi / p.separation, 100.0 * pi / p.separation};
    const auto curve = estimate_power_curve(p, level, 4000, 400, 8);
    for (double power : curve.power) CHECK(std::abs(power - 0.5) < 0.1);
  }
}

TEST_CASE("power falls through 0.75 near pi/d") {
  struct Case {
    double ratio;
    std::size_t n;
  };
  for (Case c : {Case{5.0, 1000}, Case{20.0, 1000}, Case{100.0, 1000}, Case{20.0, 10000}, Case{100.0, 10000}}) {
    const SuperposedWavepacket p{1.0, c.ratio, 0.0};
    const double unit = pi / p.separation;
    std::vector<double> levels;
    for (int i = 0; i <= 20; ++i) levels.push_back(unit * std::pow(10.0, -0.6 + 1.2 * i / 20.0));
    const auto curve = estimate_power_curve(p, levels, c.n, 200, 31);
    double crossing = 0.0;
    for (std::size_t i = 1; i < levels.size(); ++i) {
      if (curve.power[i - 1] >= 0.75 && curve.power[i] < 0.75) {
        const double f = (curve.power[i - 1] - 0.75) / (curve.power[i - 1] - curve.power[i]);
        crossing = levels[i - 1] * std::pow(levels[i] / levels[i - 1], f);
        break;
      }
    }
    INFO("d/sigma = " << c.ratio << ", n = " << c.n << ", crossing at " << crossing / unit << " pi/d");
    CHECK(crossing > unit / 3.0);
    CHECK(crossing < 3.0 * unit);
  }
}
