#pragma once

#include <string_view>

namespace supertime {

/// SI values of the constants every other module is parametrised by.
/// Instances are passed explicitly; there is no global constant table.
struct PhysicalConstants {
  double hbar = 1.054571817e-34;       // J s
  double c = 299792458.0;              // m / s
  double G = 6.67430e-11;              // m^3 / (kg s^2)
  double epsilon0 = 8.8541878128e-12;  // F / m
  double e_charge = 1.602176634e-19;   // C

  /// CODATA 2018 values.
  static PhysicalConstants codata() { return {}; }

  /// Throws InvalidInput unless every field is strictly positive.
  void validate() const;
};

struct PlanckScales {
  double mass;    // kg
  double charge;  // C, sqrt(4 pi eps0 hbar c)
  double length;  // m
};

PlanckScales planck_scales(const PhysicalConstants& k);

enum class Dimension { mass, charge, length, time, momentum };

std::string_view to_string(Dimension dim);
Dimension parse_dimension(std::string_view tag);

/// A scalar carrying the dimension tag that decides its conversion factor.
struct Quantity {
  double value;
  Dimension dimension;
};

// Natural units: hbar = c = epsilon0 = G = 1 (rationalised Planck units).
// The unit of charge is sqrt(eps0 hbar c), so the Planck charge is sqrt(4 pi)
// and q_P^2 = 4 pi. Units of mass, length and time are m_P, l_P and l_P / c.

/// SI value of one natural unit of the given dimension.
double natural_unit(Dimension dim, const PhysicalConstants& k);

double to_natural(Quantity q, const PhysicalConstants& k);
Quantity from_natural(double value, Dimension dim, const PhysicalConstants& k);

}  // namespace supertime
