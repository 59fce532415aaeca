#include "supertime/bounds.hpp"

#include "supertime/errors.hpp"

namespace supertime {

void SuperpositionSpec::validate() const {
  detail::require_positive(magnitude, "superposition magnitude");
  detail::require_positive(separation_d, "separation d");
}

double min_time_mass(double mass, double d, const PhysicalConstants& k) {
  detail::require_positive(mass, "mass");
  detail::require_positive(d, "separation d");
  return mass / planck_scales(k).mass * d / k.c;
}

double min_time_charge(double charge, double d, const PhysicalConstants& k) {
  detail::require_positive(charge, "charge");
  detail::require_positive(d, "separation d");
  return charge / planck_scales(k).charge * d / k.c;
}

double planck_ratio(const SuperpositionSpec& spec, const PhysicalConstants& k) {
  spec.validate();
  const PlanckScales p = planck_scales(k);
  return spec.kind == SuperpositionKind::mass ? spec.magnitude / p.mass
                                              : spec.magnitude / p.charge;
}

double min_time(const SuperpositionSpec& spec, const PhysicalConstants& k) {
  return spec.kind == SuperpositionKind::mass ? min_time_mass(spec.magnitude, spec.separation_d, k)
                                              : min_time_charge(spec.magnitude, spec.separation_d, k);
}

double sharp_min_time(const SuperpositionSpec& spec, const PhysicalConstants& k) {
  return kSharpBoundConstant * min_time(spec, k);
}

double min_localization_mass(const PhysicalConstants& k) { return planck_scales(k).length; }

double charge_radius(double charge, double mass, const PhysicalConstants& k) {
  detail::require_positive(charge, "charge");
  detail::require_positive(mass, "mass");
  return charge / planck_scales(k).charge * k.hbar / (mass * k.c);
}

double larmor_power(double charge, double omega, double dx, const PhysicalConstants& k) {
  detail::require_positive(charge, "charge");
  detail::require_non_negative(omega, "omega");
  detail::require_non_negative(dx, "dx");
  k.validate();
  const double w2 = omega * omega;
  return charge * charge * w2 * w2 * dx * dx / (k.epsilon0 * k.c * k.c * k.c);
}

}  // namespace supertime
