#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "supertime/tabulated.hpp"
#include "supertime/units.hpp"

namespace supertime {

enum class TrajectoryShape { sin_squared, tabulated };

/// One-dimensional path x(t) from x(0) = 0 to x(t0) = d that starts and ends at rest.
class TrajectoryProfile {
 public:
  /// x(t) = d sin^2(pi t / (2 t0)).
  static TrajectoryProfile sin_squared(double d, double t0);

  /// Samples of (t [s], x [m]) starting at t = 0. At least 16 rows. End
  /// velocities of the interpolant must vanish to 1e-6 d/t0 and are then
  /// pinned to zero.
  static TrajectoryProfile tabulated(std::vector<Sample> samples);

  TrajectoryShape shape() const { return shape_; }
  double d() const { return d_; }
  double t0() const { return t0_; }

  double position(double t) const;
  double velocity(double t) const;

  /// |v(w)|^2 / d^2 as a function of u = w t0.
  double reduced_spectrum(double u) const;

 private:
  TrajectoryShape shape_ = TrajectoryShape::sin_squared;
  double d_ = 0.0;
  double t0_ = 0.0;
  PiecewiseCubic path_;

  friend std::complex<double> velocity_fourier(const TrajectoryProfile&, double);
};

inline constexpr std::size_t kMinTrajectorySamples = 16;

/// v(w) = int v(t) exp(i w t) dt, in metres. Closed form for sin^2 with the
/// removable singularity at w t0 = pi expanded in a series.
std::complex<double> velocity_fourier(const TrajectoryProfile& profile, double omega);

/// Non-relativistic gate: d < c t0 / 3.
inline constexpr double kNonRelativisticGate = 1.0 / 3.0;

/// int_0^inf |v(w)|^2 w dw in units of d^2/t0^2 (dimensionless). Periods of
/// the oscillation are integrated adaptively up to w t0 = 400 pi and the
/// w^-3 tail is added from its fitted amplitude.
double reduced_mode_integral(const TrajectoryProfile& profile);

/// Exponent E of |<0|f>|^2 = exp(-E): (q^2 / 6 pi^2) int |v(w)|^2 w dw in
/// natural units. Throws ApproximationError outside the non-relativistic gate.
double mode_integral(const TrajectoryProfile& profile, double charge,
                     const PhysicalConstants& k = {});

/// pi (pi Si(pi) - 2) / 6, the sin^2 exponent per (q/q_P)^2 (d / c t0)^2.
double sin_squared_exponent_constant();

double vacuum_overlap(const TrajectoryProfile& profile, double charge,
                      const PhysicalConstants& k = {});

/// sqrt(2) (q/q_P) d / c: duration above which the motion leaves the field
/// essentially in the vacuum.
double min_radiationless_time(double charge, double d, const PhysicalConstants& k = {});

/// Quadrature grid over angular frequency (rad/s).
struct ModeGrid {
  std::vector<double> omega;
  std::vector<double> weights;

  /// `panels` equal Gauss-Legendre panels of `nodes_per_panel` nodes on (0, omega_max].
  static ModeGrid composite_gauss_legendre(double omega_max, int panels, int nodes_per_panel);
  void validate() const;
  std::size_t size() const { return omega.size(); }
};

/// Mode amplitudes of a coherent field state on a ModeGrid, natural units.
/// The transverse projector is angle-averaged (factor 2/3) and the measure
/// w^2 / (2 pi^2) of d^3k / (2 pi)^3 is applied in the overlap functions, so
/// each node carries one Cartesian 3-vector.
struct DisplacementFunction {
  std::vector<std::array<std::complex<double>, 3>> values;
  bool long_wavelength_ok = true;
  std::string warning;

  static DisplacementFunction zero(std::size_t nodes) {
    return {std::vector<std::array<std::complex<double>, 3>>(nodes), true, {}};
  }
};

/// f(w) = i q sqrt(2/3) v(w) / sqrt(2 w) along the direction of motion.
/// Grids reaching beyond c / (3 d) are flagged in `warning`, not rejected.
DisplacementFunction displacement_from_trajectory(const TrajectoryProfile& profile, double charge,
                                                  const ModeGrid& grid,
                                                  const PhysicalConstants& k = {});

/// sum_n weight_n * measure_n * <f_n, g_n>  (conjugate-linear in f).
std::complex<double> mode_inner_product(const DisplacementFunction& f,
                                        const DisplacementFunction& g, const ModeGrid& grid,
                                        const PhysicalConstants& k = {});

/// <f|g> for coherent states |f> = D[f]|0>.
std::complex<double> coherent_amplitude(const DisplacementFunction& f,
                                        const DisplacementFunction& g, const ModeGrid& grid,
                                        const PhysicalConstants& k = {});

/// |<f|g>|^2 = exp(-sum |f - g|^2).
double coherent_overlap(const DisplacementFunction& f, const DisplacementFunction& g,
                        const ModeGrid& grid, const PhysicalConstants& k = {});

struct Composition {
  DisplacementFunction sum;
  std::complex<double> phase;  // D[f] D[g] = D[f + g] * phase
};

Composition compose(const DisplacementFunction& f, const DisplacementFunction& g,
                    const ModeGrid& grid, const PhysicalConstants& k = {});

}  // namespace supertime
