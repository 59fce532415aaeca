#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "supertime/echo.hpp"

namespace supertime::oracle {

// Grid propagation of a single particle under H = P^2/2m - F X, in units with
// hbar = 1. Positions, momenta and times are whatever consistent natural units
// the caller picks; GaussianState fields are read in those units.

struct GridSpec {
  double x_min = -1.0;
  double x_max = 1.0;
  std::size_t n_points = 1024;  // power of two

  void validate() const;
  double dx() const { return (x_max - x_min) / static_cast<double>(n_points); }
  double x(std::size_t i) const { return x_min + dx() * static_cast<double>(i); }
  /// Largest resolvable wavenumber, pi / dx.
  double k_nyquist() const;
};

struct GridState {
  GridSpec grid;
  std::vector<std::complex<double>> amplitudes;

  double norm() const;
  double mean_x() const;
  double width_x() const;
  /// Momentum moments are evaluated spectrally.
  double mean_p() const;
  double width_p() const;
  /// max(|psi(x_min)|, |psi(x_last)|) / max |psi|.
  double boundary_ratio() const;
};

/// Thrown when the wavefunction reaches the grid edge or drifts in norm.
inline constexpr double kBoundaryTolerance = 1e-8;
inline constexpr double kNormDriftTolerance = 1e-8;

GridState init_gaussian(const GridSpec& grid, const GaussianState& state);

/// Strang splitting: half potential kick, exact kinetic step in k-space, half
/// kick. For a linear potential the splitting error is a pure global phase.
GridState propagate_linear(const GridState& state, double F, double m, double t,
                           std::size_t n_steps);

/// sum conj(a) b dx over a shared grid.
std::complex<double> inner_product(const GridState& a, const GridState& b);

/// <psi_R(t) | psi_L(t)> = <phi| U_R^dagger U_L |phi>.
std::complex<double> echo_overlap_numeric(const GridState& state0, double F_L, double F_R, double m,
                                          double t, std::size_t n_steps);

/// Grid that holds the packet for every force in `forces` over [0, t]: the
/// classical excursion padded by 10 widths, with spacing fine enough for the
/// largest momentum reached.
GridSpec grid_for_echo(const GaussianState& state, const std::vector<double>& forces, double m,
                       double t, std::size_t min_points = 256);

}  // namespace supertime::oracle
