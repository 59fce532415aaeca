#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "supertime/units.hpp"

namespace supertime {

// Momenta in this module are wavenumbers k = p / hbar (1/m); noise levels are
// standard deviations in the same units. required_precision() converts to SI.

/// (phi(x) + e^{i phase} phi(x - d)) / N with Gaussian phi of width sigma,
/// projected on the separation axis. N includes the packet overlap, so d = 0
/// reduces to a single packet.
struct SuperposedWavepacket {
  double sigma = 1.0;       // m
  double separation = 0.0;  // m
  double phase = 0.0;       // rad

  void validate() const;
  /// Momentum spread of a single packet, 1 / (2 sigma).
  double k_spread() const { return 0.5 / sigma; }
  /// <phi(x) | phi(x - d)> = exp(-d^2 / (8 sigma^2)).
  double packet_overlap() const;
};

enum class Hypothesis { coherent, mixed };

double momentum_density_coherent(double k, const SuperposedWavepacket& packet);
double momentum_density_mixed(double k, const SuperposedWavepacket& packet);

/// Density of a measured momentum under each hypothesis, with additive
/// Gaussian measurement noise of standard deviation `noise_dk`.
double noisy_density(double k, const SuperposedWavepacket& packet, Hypothesis hypothesis,
                     double noise_dk);

/// Fringe resolution pi hbar / d in kg m/s.
double required_precision(double d, const PhysicalConstants& k = {});
/// The same in wavenumber units, pi / d.
double required_precision_wavenumber(double d);

/// Seed of stream `stream`, index `index` derived from `root` with splitmix64;
/// every random draw in the module goes through this rule.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream, std::uint64_t index);

/// n i.i.d. draws from the selected density convolved with N(0, noise_dk^2).
std::vector<double> sample_momenta(const SuperposedWavepacket& packet, Hypothesis hypothesis,
                                   std::size_t n, double noise_dk, std::uint64_t seed);

struct DiscriminationResult {
  std::size_t n_samples = 0;
  double noise_dk = 0.0;
  double log_likelihood_ratio = 0.0;  // log p_coherent - log p_mixed, summed
  Hypothesis decision = Hypothesis::mixed;
  double power_estimate = -1.0;  // set by estimate_power, negative when not computed
};

/// Likelihood-ratio test between the two noise-convolved densities.
DiscriminationResult discriminate(std::span<const double> samples,
                                  const SuperposedWavepacket& packet, double noise_dk);

struct PowerCurve {
  std::vector<double> noise_dk;
  std::vector<double> power;
  std::size_t trials = 0;
  std::size_t n_samples = 0;
};

/// Fraction of coherent-sample trials that the test labels coherent, for
/// each noise level. Trials share their noise-free draws and standard-normal
/// noise across levels (common random numbers), and run concurrently.
PowerCurve estimate_power_curve(const SuperposedWavepacket& packet,
                                std::span<const double> noise_levels, std::size_t n_samples,
                                std::size_t trials, std::uint64_t root_seed);

DiscriminationResult estimate_power(const SuperposedWavepacket& packet, double noise_dk,
                                    std::size_t n_samples, std::size_t trials,
                                    std::uint64_t root_seed);

/// 2x2 spin density matrix in the (up, down) basis.
using SpinState = std::array<std::array<std::complex<double>, 2>, 2>;

struct SpinOutcome {
  double visibility;  // |rho_updown| * 2
  double p_plus;
  double p_minus;
  SpinState state;
};

/// Spin-protocol readout: after the spin-dependent recombination the
/// coherence is multiplied by vacuum_overlap^kappa of the sin^2 move of
/// duration t0. kappa = 1 reads the suppression as the probability overlap,
/// kappa = 2 as its square; the default is 1. A collapsed input (Bob measured)
/// has no coherence to begin with.
SpinOutcome spin_protocol(double charge, double d, double t0, bool collapsed = false,
                          double kappa = 1.0, const PhysicalConstants& k = {});

double spin_protocol_visibility(double charge, double d, double t0, double kappa = 1.0,
                                const PhysicalConstants& k = {});

}  // namespace supertime
