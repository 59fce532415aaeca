#include <doctest.h>

#include <cmath>
#include <numbers>

#include "supertime/errors.hpp"
#include "supertime/units.hpp"

using namespace supertime;

TEST_CASE("planck scales from CODATA constants") {
  const PhysicalConstants k;
  const PlanckScales p = planck_scales(k);
  CHECK(p.mass == doctest::Approx(2.18e-8).epsilon(5e-3));
  CHECK(p.charge / k.e_charge == doctest::Approx(11.7).epsilon(5e-3));
  CHECK(p.length == doctest::Approx(1.616e-35).epsilon(1e-3));
  CHECK(p.mass == std::sqrt(k.hbar * k.c / k.G));
  CHECK(p.charge == std::sqrt(4.0 * std::numbers::pi * k.epsilon0 * k.hbar * k.c));
  CHECK(p.length == std::sqrt(k.hbar * k.G / (k.c * k.c * k.c)));
}

TEST_CASE("constants are validated") {
  PhysicalConstants k;
  CHECK_NOTHROW(k.validate());
  k.G = -1.0;
  CHECK_THROWS_AS(k.validate(), InvalidInput);
  k = {};
  k.hbar = std::nan("");
  CHECK_THROWS_AS(k.validate(), InvalidInput);
  CHECK_THROWS_AS(planck_scales(k), InvalidInput);
}

TEST_CASE("planck charge squared is 4 pi in natural units") {
  const PhysicalConstants k;
  const double q = to_natural({planck_scales(k).charge, Dimension::charge}, k);
  CHECK(q * q == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-13));
}

TEST_CASE("natural units: planck mass and length are unity up to the 4 pi choice") {
  const PhysicalConstants k;
  // Rationalised units with G = 1: mass unit sqrt(hbar c / G) = m_P.
  CHECK(to_natural({planck_scales(k).mass, Dimension::mass}, k) == doctest::Approx(1.0));
  CHECK(to_natural({planck_scales(k).length, Dimension::length}, k) == doctest::Approx(1.0));
  const double t = to_natural({1.0 / k.c, Dimension::time}, k);
  const double x = to_natural({1.0, Dimension::length}, k);
  CHECK(t == doctest::Approx(x));
}

TEST_CASE("zero maps to zero and conversions round-trip") {
  const PhysicalConstants k;
  CHECK(to_natural({0.0, Dimension::length}, k) == 0.0);
  for (auto dim : {Dimension::mass, Dimension::charge, Dimension::length, Dimension::time,
                   Dimension::momentum}) {
    const double v = 3.7e-3;
    const Quantity back = from_natural(to_natural({v, dim}, k), dim, k);
    CHECK(back.dimension == dim);
    CHECK(back.value == doctest::Approx(v).epsilon(1e-14));
  }
  const double d_over_c = 1.0 / k.c;
  CHECK(from_natural(to_natural({d_over_c, Dimension::time}, k), Dimension::time, k).value ==
        doctest::Approx(d_over_c).epsilon(1e-14));
}

TEST_CASE("dimension tags") {
  CHECK(parse_dimension("momentum") == Dimension::momentum);
  CHECK(to_string(Dimension::charge) == "charge");
  CHECK_THROWS_AS(parse_dimension("energy"), InvalidInput);
  CHECK_THROWS_AS(parse_dimension(""), InvalidInput);
}
