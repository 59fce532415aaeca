#pragma once

#include <optional>

#include "supertime/bounds.hpp"
#include "supertime/echo.hpp"

namespace supertime {

/// Alice's superposition, Bob's test particle and the distance between labs.
struct Scenario {
  SuperpositionSpec alice;
  double bob_mass = 1.0;    // kg
  double bob_charge = 0.0;  // C, only used when Alice's superposition is charged
  double R = 1.0;           // m
  std::optional<double> sigma;  // Bob's localisation; defaults to localization_limit()

  /// Planck length for the gravitational case, Bob's charge radius otherwise.
  double localization_limit(const PhysicalConstants& k = {}) const;
  double bob_sigma(const PhysicalConstants& k = {}) const;
  ForcePair forces(const PhysicalConstants& k = {}) const;
  void validate(const PhysicalConstants& k = {}) const;
};

struct TimelineReport {
  double T_B;        // s, entanglement time at the localisation limit
  double T_A;        // s, Alice's measurement duration under audit
  double T_A_bound;  // s, max(0, R/c - T_B): shortest T_A causality permits here
  double eta;        // c T_B / R, clamped to 1 when T_B >= R/c
  bool satisfied;    // T_A + T_B >= R/c
};

/// Solves delta_F T_B^2 / (2 m_B dX_min) = 1 with the dipole force and the
/// localisation floor. The order-unity "~ 1" is taken as equality.
double tb_at_localization_limit(const Scenario& scenario, const PhysicalConstants& k = {});

struct EtaOptimum {
  double eta_star;
  double ta_bound;  // s, (1/2) ratio (d/c) (eta*^2 - eta*^3)
};

/// Maximises eta^2 - eta^3 over [0, 1] numerically; the closed-form answer is
/// eta* = 2/3 with bound (2/27) ratio d/c.
EtaOptimum optimize_eta(const SuperpositionSpec& alice, const PhysicalConstants& k = {});

/// Checks T_A + T_B >= R/c for the given measurement time.
TimelineReport audit_timeline(const Scenario& scenario, double T_A,
                              const PhysicalConstants& k = {});

}  // namespace supertime
