#include <doctest.h>

#include <cmath>
#include <random>

#include "supertime/causality.hpp"
#include "supertime/errors.hpp"

using namespace supertime;

namespace {

const PhysicalConstants k;
const PlanckScales P = planck_scales(k);

Scenario mass_scenario(double m_a, double d, double R, double m_b = 1.0) {
  Scenario s;
  s.alice = {SuperpositionKind::mass, m_a, d};
  s.bob_mass = m_b;
  s.R = R;
  return s;
}

Scenario charge_scenario(double q_a, double d, double R, double m_b, double q_b) {
  Scenario s;
  s.alice = {SuperpositionKind::charge, q_a, d};
  s.bob_mass = m_b;
  s.bob_charge = q_b;
  s.R = R;
  return s;
}

std::vector<double> log_sweep(double center, int points, double decades) {
  std::vector<double> out;
  for (int i = 0; i < points; ++i) {
    out.push_back(center * std::pow(10.0, decades * (static_cast<double>(i) / (points - 1) - 0.5)));
  }
  return out;
}

}  // namespace

TEST_CASE("T_B in the mass case does not depend on Bob's mass") {
  const double m_a = 1.0, d = 1e-3, R = 1.0;
  const double expected = std::sqrt(2.0 * P.length * R * R * R / (k.G * m_a * d));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> logu(-20.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double T = tb_at_localization_limit(mass_scenario(m_a, d, R, std::pow(10.0, logu(rng))), k);
    CHECK(std::abs(T - expected) / expected < 1e-9);
  }
}

TEST_CASE("T_B in the charge case does not depend on Bob's mass or charge") {
  const double q_a = 1e-12, d = 1e-3, R = 1.0;
  const double ref = tb_at_localization_limit(charge_scenario(q_a, d, R, 1.0, 1e-15), k);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> logu(-10.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double m_b = std::pow(10.0, logu(rng) - 20.0);
    const double q_b = std::pow(10.0, logu(rng) - 15.0);
    const double T = tb_at_localization_limit(charge_scenario(q_a, d, R, m_b, q_b), k);
    CHECK(std::abs(T - ref) / ref < 1e-9);
  }
}

TEST_CASE("T_B scales as R^(3/2)") {
  const double a = tb_at_localization_limit(mass_scenario(1.0, 1e-3, 1.0), k);
  const double b = tb_at_localization_limit(mass_scenario(1.0, 1e-3, 4.0), k);
  CHECK(b / a == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("eta optimisation") {
  const SuperpositionSpec alice{SuperpositionKind::mass, 1e-3, 1e-4};
  const EtaOptimum opt = optimize_eta(alice, k);
  CHECK(std::abs(opt.eta_star - 2.0 / 3.0) < 1e-9);
  CHECK(std::abs(opt.ta_bound - sharp_min_time(alice, k)) / opt.ta_bound < 1e-9);
  const auto f = [](double eta) { return eta * eta - eta * eta * eta; };
  CHECK(f(0.0) == 0.0);
  CHECK(f(1.0) == 0.0);
}

TEST_CASE("audit: T_A = R/c always satisfies") {
  const Scenario s = mass_scenario(1.0, 1e-3, 100.0);
  const TimelineReport r = audit_timeline(s, s.R / k.c, k);
  CHECK(r.satisfied);
  CHECK(r.eta >= 0.0);
  CHECK(r.eta <= 1.0);
  CHECK_THROWS_AS(audit_timeline(s, -1.0, k), InvalidInput);
}

TEST_CASE("audit: sharp bound holds across 10 decades, 0.9x of it does not") {
  const double m_a = 1.0, d = 1e-3;
  const SuperpositionSpec alice{SuperpositionKind::mass, m_a, d};
  const double sharp = sharp_min_time(alice, k);
  const double R_opt = planck_ratio(alice, k) * d * 2.0 / 9.0;
  bool any_violation = false;
  for (double R : log_sweep(R_opt, 201, 10.0)) {
    const Scenario s = mass_scenario(m_a, d, R);
    CHECK(audit_timeline(s, sharp, k).satisfied);
    if (!audit_timeline(s, 0.9 * sharp, k).satisfied) any_violation = true;
  }
  CHECK(any_violation);
}

TEST_CASE("audit: no violation at the sharp bound over random scenarios") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const double d = std::pow(10.0, -6.0 + 4.0 * u(rng));
    const double R = d * std::pow(10.0, 1.0 + 12.0 * u(rng));
    Scenario s = i % 2 ? mass_scenario(std::pow(10.0, -6.0 + 12.0 * u(rng)), d, R,
                                       std::pow(10.0, -25.0 + 25.0 * u(rng)))
                       : charge_scenario(std::pow(10.0, -18.0 + 14.0 * u(rng)), d, R,
                                         std::pow(10.0, -30.0 + 25.0 * u(rng)),
                                         std::pow(10.0, -19.0 + 10.0 * u(rng)));
    if (!audit_timeline(s, sharp_min_time(s.alice, k), k).satisfied) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("scenario validation") {
  Scenario s = mass_scenario(1.0, 1e-3, 1.0);
  s.sigma = 0.5 * P.length;
  CHECK_THROWS_AS(s.validate(k), InvalidInput);
  s.sigma = 1e-9;
  CHECK_NOTHROW(s.validate(k));
  CHECK(s.bob_sigma(k) == 1e-9);
  Scenario c = charge_scenario(1e-12, 1e-3, 1.0, 1.0, 0.0);
  CHECK_THROWS_AS(c.validate(k), InvalidInput);
  CHECK_THROWS_AS(tb_at_localization_limit(mass_scenario(1.0, 0.5, 1.0), k), ApproximationError);
}
