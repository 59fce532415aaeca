#pragma once

#include <complex>
#include <optional>

#include "supertime/units.hpp"

namespace supertime {

/// Forces on Bob's test particle from the two branches of Alice's superposition.
///
/// F_L and F_R are the exact force components along the separation axis for a
/// superposition oriented perpendicular to the line joining the labs; their
/// difference approaches delta_F up to O(d^2 / R^2). delta_F is the dipole
/// estimate that the rest of the toolkit works with.
struct ForcePair {
  double F_L;
  double F_R;
  double delta_F;

  double exact_difference() const { return F_L - F_R; }
  double sum() const { return F_L + F_R; }
};

/// Dipole expansion validity gate: d must stay below R / 10.
inline constexpr double kDipoleGate = 0.1;

ForcePair force_difference_gravity(double mass_a, double mass_b, double d, double R,
                                   const PhysicalConstants& k = {});
ForcePair force_difference_coulomb(double charge_a, double charge_b, double d, double R,
                                   const PhysicalConstants& k = {});

/// Minimum-uncertainty wavepacket; momentum spread is hbar / (2 sigma).
struct GaussianState {
  double x0 = 0.0;     // m
  double p0 = 0.0;     // kg m / s
  double sigma = 1.0;  // m

  double momentum_spread(const PhysicalConstants& k = {}) const;
};

struct EchoResult {
  double delta_x = 0.0;      // m
  double delta_p = 0.0;      // kg m / s
  double cubic_phase = 0.0;  // rad
  double time = 0.0;         // s
  std::optional<double> overlap;
};

/// Phase-space shifts of the Loschmidt echo operator exp(iH_R t) exp(-iH_L t)
/// after time t, plus the c-number phase left over by the BCH expansion.
EchoResult echo_displacements(double delta_F, double mass_b, double F_sum, double t,
                              const PhysicalConstants& k = {});

/// |<phi| L(t) |phi>| for the Gaussian state; the cubic phase drops out.
double echo_overlap(const GaussianState& state, const EchoResult& echo,
                    const PhysicalConstants& k = {});

/// Full complex <phi| L(t) |phi>, including the displacement phase and the
/// cubic BCH phase.
std::complex<double> echo_amplitude(const GaussianState& state, const EchoResult& echo,
                                    const PhysicalConstants& k = {});

/// Time at which delta_x reaches sigma: sqrt(2 m_B sigma / delta_F).
double entanglement_time(double delta_F, double mass_b, double sigma,
                         const PhysicalConstants& k = {});

/// Time for the momentum shift to exceed the packet's momentum spread,
/// hbar / (delta_F sigma).
double momentum_route_time(double delta_F, double sigma, const PhysicalConstants& k = {});

/// Widest trap ground state still insensitive to delta_F:
/// (hbar^2 / (m_B delta_F))^(1/3).
double trap_max_width(double mass_b, double delta_F, const PhysicalConstants& k = {});

/// Default orthogonality threshold used when a caller wants a single
/// "entangled" time from the continuous overlap. A convention, not derived.
inline constexpr double kDefaultOrthogonalityThreshold = 0.36787944117144233;  // 1/e

/// Earliest t with echo_overlap <= threshold for a packet of width sigma.
double orthogonalization_time(double delta_F, double mass_b, double sigma,
                              double threshold = kDefaultOrthogonalityThreshold,
                              const PhysicalConstants& k = {});

}  // namespace supertime
