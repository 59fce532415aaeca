#include "supertime/oracle.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "supertime/errors.hpp"

namespace supertime::oracle {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double kPadWidths = 10.0;

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// In-place forward/backward transforms on one buffer. Plan creation and
// destruction go through the global mutex; execution is thread-safe.
class Transform {
 public:
  explicit Transform(std::size_t n) : n_(n) {
    buffer_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    if (!buffer_) throw NumericalError("fftw_malloc failed");
    std::lock_guard lock(planner_mutex());
    const int len = static_cast<int>(n);
    forward_ = fftw_plan_dft_1d(len, buffer_, buffer_, FFTW_FORWARD, FFTW_ESTIMATE);
    backward_ = fftw_plan_dft_1d(len, buffer_, buffer_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Transform() {
    {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(forward_);
      fftw_destroy_plan(backward_);
    }
    fftw_free(buffer_);
  }
  Transform(const Transform&) = delete;
  Transform& operator=(const Transform&) = delete;

  std::complex<double>* data() { return reinterpret_cast<std::complex<double>*>(buffer_); }
  void forward() { fftw_execute(forward_); }
  /// Unnormalised inverse; callers scale by 1/n.
  void backward() { fftw_execute(backward_); }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  fftw_complex* buffer_ = nullptr;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

double wavenumber(const GridSpec& g, std::size_t j) {
  const auto n = static_cast<std::ptrdiff_t>(g.n_points);
  auto idx = static_cast<std::ptrdiff_t>(j);
  if (idx >= n / 2) idx -= n;
  return 2.0 * pi * static_cast<double>(idx) / (g.x_max - g.x_min);
}

std::vector<double> momentum_weights(const GridState& s) {
  Transform fft(s.grid.n_points);
  std::copy(s.amplitudes.begin(), s.amplitudes.end(), fft.data());
  fft.forward();
  std::vector<double> w(s.grid.n_points);
  double total = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    w[j] = std::norm(fft.data()[j]);
    total += w[j];
  }
  for (double& v : w) v /= total;
  return w;
}

void check_boundary(const GridState& s, const char* where) {
  const double ratio = s.boundary_ratio();
  if (!(ratio < kBoundaryTolerance)) {
    std::ostringstream msg;
    msg << where << ": wavefunction reaches the grid edge (boundary/peak = " << ratio << ")";
    throw NumericalError(msg.str());
  }
}

}  // namespace

void GridSpec::validate() const {
  if (!(std::isfinite(x_min) && std::isfinite(x_max) && x_max > x_min)) {
    throw InvalidInput("grid needs finite x_min < x_max");
  }
  if (n_points < 8 || !std::has_single_bit(n_points)) {
    throw InvalidInput("grid size must be a power of two >= 8");
  }
}

double GridSpec::k_nyquist() const { return pi / dx(); }

double GridState::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return s * grid.dx();
}

double GridState::mean_x() const {
  double s = 0.0;
  double w = 0.0;
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    const double p = std::norm(amplitudes[i]);
    s += p * grid.x(i);
    w += p;
  }
  return s / w;
}

double GridState::width_x() const {
  const double mu = mean_x();
  double s = 0.0;
  double w = 0.0;
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    const double p = std::norm(amplitudes[i]);
    const double dx = grid.x(i) - mu;
    s += p * dx * dx;
    w += p;
  }
  return std::sqrt(s / w);
}

double GridState::mean_p() const {
  const auto w = momentum_weights(*this);
  double s = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * wavenumber(grid, j);
  return s;
}

double GridState::width_p() const {
  const auto w = momentum_weights(*this);
  double mu = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) mu += w[j] * wavenumber(grid, j);
  double s = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double dk = wavenumber(grid, j) - mu;
    s += w[j] * dk * dk;
  }
  return std::sqrt(s);
}

double GridState::boundary_ratio() const {
  double peak = 0.0;
  for (const auto& a : amplitudes) peak = std::max(peak, std::abs(a));
  const double edge = std::max(std::abs(amplitudes.front()), std::abs(amplitudes.back()));
  return peak > 0.0 ? edge / peak : 1.0;
}

GridState init_gaussian(const GridSpec& grid, const GaussianState& state) {
  grid.validate();
  detail::require_positive(state.sigma, "sigma");
  const double reach = 6.0 * state.sigma;
  if (state.x0 - reach < grid.x_min || state.x0 + reach > grid.x_max) {
    throw InvalidInput("grid too narrow: x0 +- 6 sigma must lie inside [x_min, x_max]");
  }
  if (std::abs(state.p0) + 6.0 / (2.0 * state.sigma) > grid.k_nyquist()) {
    throw InvalidInput("grid too coarse for the packet's momentum content");
  }
  GridState s{grid, std::vector<std::complex<double>>(grid.n_points)};
  const double amp = std::pow(2.0 * pi * state.sigma * state.sigma, -0.25);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double u = grid.x(i) - state.x0;
    s.amplitudes[i] =
        std::polar(amp * std::exp(-u * u / (4.0 * state.sigma * state.sigma)), state.p0 * u);
  }
  // Discrete renormalisation; the continuum norm differs by spectrally small terms.
  const double scale = 1.0 / std::sqrt(s.norm());
  for (auto& a : s.amplitudes) a *= scale;
  return s;
}

GridState propagate_linear(const GridState& state, double F, double m, double t,
                           std::size_t n_steps) {
  state.grid.validate();
  detail::require_positive(m, "mass");
  detail::require_non_negative(t, "t");
  if (n_steps == 0) throw InvalidInput("n_steps must be at least 1");
  if (!std::isfinite(F)) throw InvalidInput("force must be finite");

  const GridSpec& g = state.grid;
  const std::size_t n = g.n_points;
  const double dt = t / static_cast<double>(n_steps);
  const double norm0 = state.norm();

  std::vector<std::complex<double>> kick(n);
  std::vector<std::complex<double>> drift(n);
  for (std::size_t i = 0; i < n; ++i) kick[i] = std::polar(1.0, 0.5 * F * g.x(i) * dt);
  for (std::size_t j = 0; j < n; ++j) {
    const double k = wavenumber(g, j);
    drift[j] = std::polar(1.0 / static_cast<double>(n), -0.5 * k * k * dt / m);
  }

  Transform fft(n);
  auto* psi = fft.data();
  std::copy(state.amplitudes.begin(), state.amplitudes.end(), psi);
  for (std::size_t step = 0; step < n_steps; ++step) {
    for (std::size_t i = 0; i < n; ++i) psi[i] *= kick[i];
    fft.forward();
    for (std::size_t j = 0; j < n; ++j) psi[j] *= drift[j];
    fft.backward();
    for (std::size_t i = 0; i < n; ++i) psi[i] *= kick[i];
  }

  GridState out{g, std::vector<std::complex<double>>(psi, psi + n)};
  const double drift_norm = std::abs(out.norm() - norm0) / norm0;
  if (!(drift_norm <= kNormDriftTolerance)) {
    std::ostringstream msg;
    msg << "propagate_linear: norm drift " << drift_norm << " after " << n_steps << " steps";
    throw NumericalError(msg.str());
  }
  check_boundary(out, "propagate_linear");
  return out;
}

std::complex<double> inner_product(const GridState& a, const GridState& b) {
  if (a.grid.n_points != b.grid.n_points || a.grid.x_min != b.grid.x_min ||
      a.grid.x_max != b.grid.x_max) {
    throw InvalidInput("inner product of states on different grids");
  }
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return s * a.grid.dx();
}

std::complex<double> echo_overlap_numeric(const GridState& state0, double F_L, double F_R, double m,
                                          double t, std::size_t n_steps) {
  check_boundary(state0, "echo_overlap_numeric");
  const GridState left = propagate_linear(state0, F_L, m, t, n_steps);
  const GridState right = propagate_linear(state0, F_R, m, t, n_steps);
  return inner_product(right, left);
}

GridSpec grid_for_echo(const GaussianState& state, const std::vector<double>& forces, double m,
                       double t, std::size_t min_points) {
  detail::require_positive(state.sigma, "sigma");
  detail::require_positive(m, "mass");
  detail::require_non_negative(t, "t");
  const double sigma_t =
      std::sqrt(state.sigma * state.sigma + std::pow(t / (2.0 * m * state.sigma), 2));
  double lo = state.x0;
  double hi = state.x0;
  double k_max = std::abs(state.p0);
  auto visit = [&](double F, double tau) {
    const double x = state.x0 + state.p0 * tau / m + 0.5 * F * tau * tau / m;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  };
  for (double F : forces) {
    visit(F, t);
    if (F != 0.0) {
      const double vertex = -state.p0 / F;
      if (vertex > 0.0 && vertex < t) visit(F, vertex);
    }
    k_max = std::max(k_max, std::abs(state.p0 + F * t));
  }
  if (forces.empty()) visit(0.0, t);
  const double pad = kPadWidths * sigma_t;
  lo -= pad;
  hi += pad;
  k_max += kPadWidths / (2.0 * state.sigma);
  const double dx_max = pi / k_max;
  const auto needed = static_cast<std::size_t>(std::ceil((hi - lo) / dx_max));
  const std::size_t n = std::bit_ceil(std::max(needed, min_points));
  return {lo, hi, n};
}

}  // namespace supertime::oracle
