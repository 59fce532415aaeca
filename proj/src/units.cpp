#include "supertime/units.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "supertime/errors.hpp"

namespace supertime {

void PhysicalConstants::validate() const {
  detail::require_positive(hbar, "hbar");
  detail::require_positive(c, "c");
  detail::require_positive(G, "G");
  detail::require_positive(epsilon0, "epsilon0");
  detail::require_positive(e_charge, "e_charge");
}

PlanckScales planck_scales(const PhysicalConstants& k) {
  k.validate();
  return {
      std::sqrt(k.hbar * k.c / k.G),
      std::sqrt(4.0 * std::numbers::pi * k.epsilon0 * k.hbar * k.c),
      std::sqrt(k.hbar * k.G / (k.c * k.c * k.c)),
  };
}

std::string_view to_string(Dimension dim) {
  switch (dim) {
    case Dimension::mass: return "mass";
    case Dimension::charge: return "charge";
    case Dimension::length: return "length";
    case Dimension::time: return "time";
    case Dimension::momentum: return "momentum";
  }
  throw InvalidInput("unknown dimension tag");
}

Dimension parse_dimension(std::string_view tag) {
  for (auto dim : {Dimension::mass, Dimension::charge, Dimension::length, Dimension::time,
                   Dimension::momentum}) {
    if (tag == to_string(dim)) return dim;
  }
  throw InvalidInput("unknown dimension tag '" + std::string(tag) + "'");
}

double natural_unit(Dimension dim, const PhysicalConstants& k) {
  k.validate();
  const double mass = std::sqrt(k.hbar * k.c / k.G);
  const double length = std::sqrt(k.hbar * k.G / (k.c * k.c * k.c));
  switch (dim) {
    case Dimension::mass: return mass;
    case Dimension::charge: return std::sqrt(k.epsilon0 * k.hbar * k.c);
    case Dimension::length: return length;
    case Dimension::time: return length / k.c;
    case Dimension::momentum: return mass * k.c;
  }
  throw InvalidInput("unknown dimension tag");
}

double to_natural(Quantity q, const PhysicalConstants& k) {
  return q.value / natural_unit(q.dimension, k);
}

Quantity from_natural(double value, Dimension dim, const PhysicalConstants& k) {
  return {value * natural_unit(dim, k), dim};
}

}  // namespace supertime
