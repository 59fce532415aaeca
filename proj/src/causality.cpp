#include "supertime/causality.hpp"

#include <cmath>

#include "supertime/errors.hpp"
#include "supertime/numerics.hpp"

namespace supertime {

double Scenario::localization_limit(const PhysicalConstants& k) const {
  if (alice.kind == SuperpositionKind::mass) return min_localization_mass(k);
  return charge_radius(std::abs(bob_charge), bob_mass, k);
}

double Scenario::bob_sigma(const PhysicalConstants& k) const {
  return sigma.value_or(localization_limit(k));
}

ForcePair Scenario::forces(const PhysicalConstants& k) const {
  if (alice.kind == SuperpositionKind::mass) {
    return force_difference_gravity(alice.magnitude, bob_mass, alice.separation_d, R, k);
  }
  return force_difference_coulomb(alice.magnitude, bob_charge, alice.separation_d, R, k);
}

void Scenario::validate(const PhysicalConstants& k) const {
  alice.validate();
  detail::require_positive(bob_mass, "bob_mass");
  detail::require_positive(R, "R");
  if (alice.kind == SuperpositionKind::charge && bob_charge == 0.0) {
    throw InvalidInput("charge scenario needs a non-zero bob_charge");
  }
  if (sigma) {
    const double floor = localization_limit(k);
    if (!(*sigma >= floor)) {
      throw InvalidInput("sigma " + std::to_string(*sigma) + " m is below the localisation limit " +
                         std::to_string(floor) + " m");
    }
  }
}

double tb_at_localization_limit(const Scenario& scenario, const PhysicalConstants& k) {
  scenario.validate(k);
  const double delta_F = std::abs(scenario.forces(k).delta_F);
  return entanglement_time(delta_F, scenario.bob_mass, scenario.localization_limit(k), k);
}

EtaOptimum optimize_eta(const SuperpositionSpec& alice, const PhysicalConstants& k) {
  const auto objective = [](double eta) { return eta * eta - eta * eta * eta; };
  const auto slope = [](double eta) { return 2.0 * eta - 3.0 * eta * eta; };
  const numerics::Maximum best = numerics::maximize_unimodal(objective, slope, 0.0, 1.0, 1e-12);
  const double scale = 0.5 * planck_ratio(alice, k) * alice.separation_d / k.c;
  return {best.argmax, scale * best.value};
}

TimelineReport audit_timeline(const Scenario& scenario, double T_A, const PhysicalConstants& k) {
  detail::require_non_negative(T_A, "T_A");
  const double T_B = tb_at_localization_limit(scenario, k);
  const double light_time = scenario.R / k.c;
  TimelineReport report{};
  report.T_B = T_B;
  report.T_A = T_A;
  report.eta = std::min(T_B / light_time, 1.0);
  report.T_A_bound = std::max(0.0, light_time - T_B);
  // Relative slack of a few ulps: at the optimum the inequality is saturated.
  report.satisfied = T_A + T_B >= light_time * (1.0 - 1e-12);
  return report;
}

}  // namespace supertime
