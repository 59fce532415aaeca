#pragma once

#include "supertime/units.hpp"

namespace supertime {

enum class SuperpositionKind { mass, charge };

/// A particle of given mass or charge split into two branches a distance
/// `separation_d` apart.
struct SuperpositionSpec {
  SuperpositionKind kind = SuperpositionKind::mass;
  double magnitude = 0.0;     // kg or C
  double separation_d = 0.0;  // m

  void validate() const;
};

// Minimum discrimination times, quoted without the order-unity constant.
double min_time_mass(double mass, double d, const PhysicalConstants& k = {});
double min_time_charge(double charge, double d, const PhysicalConstants& k = {});

/// m/m_P or q/q_P, whichever applies to the superposition.
double planck_ratio(const SuperpositionSpec& spec, const PhysicalConstants& k = {});

/// (m/m_P) d/c or (q/q_P) d/c.
double min_time(const SuperpositionSpec& spec, const PhysicalConstants& k = {});

/// The bound with the optimised no-signalling constant: (2/27) * min_time.
double sharp_min_time(const SuperpositionSpec& spec, const PhysicalConstants& k = {});

inline constexpr double kSharpBoundConstant = 2.0 / 27.0;

/// Planck length, the localisation floor for a massive test particle.
double min_localization_mass(const PhysicalConstants& k = {});

/// (q/q_P) hbar / (m c): localisation floor of a charge before it entangles
/// with its own radiation field. A scaling limit, not a sharp threshold.
double charge_radius(double charge, double mass, const PhysicalConstants& k = {});

/// Order-of-magnitude radiated power q^2 w^4 dx^2 / (eps0 c^3) of a charge
/// oscillating with angular frequency `omega` and amplitude `dx`. No 2/3
/// Larmor prefactor.
double larmor_power(double charge, double omega, double dx, const PhysicalConstants& k = {});

}  // namespace supertime
