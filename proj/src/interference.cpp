#include "supertime/interference.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "supertime/errors.hpp"
#include "supertime/parallel.hpp"
#include "supertime/radiation.hpp"

namespace supertime {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double kFaintLogContrast = -600.0;

double normal_pdf(double x, double sd) {
  return std::exp(-0.5 * x * x / (sd * sd)) / (std::sqrt(2.0 * pi) * sd);
}

// Normalisation 1 + <phi_L|phi_R> cos(phase) of the two-packet state.
double coherent_norm(const SuperposedWavepacket& p) {
  return 1.0 + p.packet_overlap() * std::cos(p.phase);
}

struct NoiseModel {
  double total_sd;   // sqrt(s^2 + noise^2)
  double contrast;   // fringe contrast after convolution
  double shrink;     // s^2 / (s^2 + noise^2)
  double log_norm;   // log of the coherent normalisation
  bool faint;        // contrast too small to carry the decision in double
  double faint_offset;  // per-sample centring of the faint score, (norm - 1) / contrast
};

double log_fringe(double contrast, double theta);

double log_ratio(double k, const SuperposedWavepacket& p, const NoiseModel& m) {
  return log_fringe(m.contrast, m.shrink * k * p.separation - p.phase) - m.log_norm;
}

NoiseModel noise_model(const SuperposedWavepacket& p, double noise_dk) {
  detail::require_non_negative(noise_dk, "noise");
  const double s2 = p.k_spread() * p.k_spread();
  const double n2 = noise_dk * noise_dk;
  const double total = s2 + n2;
  // Given the measured k, the true momentum is N(k s^2/total, s^2 n^2/total),
  // which damps cos(k' d - phase) by exp(-var d^2 / 2).
  const double var = s2 * n2 / total;
  const double d = p.separation;
  const double log_contrast = -0.5 * var * d * d;
  return {std::sqrt(total), std::exp(log_contrast), s2 / total,
          std::log1p(p.packet_overlap() * std::cos(p.phase)), log_contrast < kFaintLogContrast,
          std::exp(-0.5 * d * d * s2 * s2 / total) * std::cos(p.phase)};
}

// Sums the log-likelihood ratio. When the fringe contrast A is below the
// double range the ratio rounds to a constant, so the decision falls back to
// its first-order form sum(cos theta_i) - n (norm - 1) / A.
struct LlrAccumulator {
  const SuperposedWavepacket& packet;
  const NoiseModel& model;
  double llr = 0.0;
  double faint_score = 0.0;

  void add(double k) {
    llr += log_ratio(k, packet, model);
    if (model.faint) {
      faint_score += std::cos(model.shrink * k * packet.separation - packet.phase) - model.faint_offset;
    }
  }
  bool coherent() const { return (model.faint ? faint_score : llr) > 0.0; }
};

// log(1 + A cos(theta)) evaluated as the log of a sum of non-negative terms.
double log_fringe(double contrast, double theta) {
  if (contrast < 0.5) return std::log1p(contrast * std::cos(theta));
  const double c = std::cos(0.5 * theta);
  return std::log((1.0 - contrast) + 2.0 * contrast * c * c);
}


std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Noise-free draws under the chosen hypothesis.
void draw_clean(const SuperposedWavepacket& p, Hypothesis h, std::size_t n, std::mt19937_64& rng,
                std::vector<double>& out) {
  std::normal_distribution<double> gauss(0.0, p.k_spread());
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double k = gauss(rng);
    if (h == Hypothesis::coherent) {
      // Envelope g(k) dominates g(k)(1 + cos)/2; accept with the fringe factor.
      while (unit(rng) >= 0.5 * (1.0 + std::cos(k * p.separation - p.phase))) k = gauss(rng);
    }
    out[i] = k;
  }
}

void draw_standard_normal(std::size_t n, std::mt19937_64& rng, std::vector<double>& out) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  out.resize(n);
  for (auto& z : out) z = gauss(rng);
}

}  // namespace

void SuperposedWavepacket::validate() const {
  detail::require_positive(sigma, "sigma");
  detail::require_non_negative(separation, "separation");
  if (!std::isfinite(phase)) throw InvalidInput("phase must be finite");
  if (!(coherent_norm(*this) > 1e-12)) {
    throw InvalidInput("packets cancel: d = 0 with phase = pi is the zero state");
  }
}

double SuperposedWavepacket::packet_overlap() const {
  return std::exp(-separation * separation / (8.0 * sigma * sigma));
}

double momentum_density_coherent(double k, const SuperposedWavepacket& packet) {
  packet.validate();
  const double fringe = 1.0 + std::cos(k * packet.separation - packet.phase);
  return normal_pdf(k, packet.k_spread()) * fringe / coherent_norm(packet);
}

double momentum_density_mixed(double k, const SuperposedWavepacket& packet) {
  packet.validate();
  return normal_pdf(k, packet.k_spread());
}

double noisy_density(double k, const SuperposedWavepacket& packet, Hypothesis hypothesis,
                     double noise_dk) {
  packet.validate();
  const NoiseModel m = noise_model(packet, noise_dk);
  const double envelope = normal_pdf(k, m.total_sd);
  if (hypothesis == Hypothesis::mixed) return envelope;
  return envelope * std::exp(log_ratio(k, packet, m));
}

double required_precision(double d, const PhysicalConstants& k) {
  return k.hbar * required_precision_wavenumber(d);
}

double required_precision_wavenumber(double d) {
  detail::require_positive(d, "d");
  return pi / d;
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(root) ^ stream) ^ index);
}

std::vector<double> sample_momenta(const SuperposedWavepacket& packet, Hypothesis hypothesis,
                                   std::size_t n, double noise_dk, std::uint64_t seed) {
  packet.validate();
  detail::require_non_negative(noise_dk, "noise");
  if (n == 0) throw InvalidInput("sample count must be at least 1");
  std::mt19937_64 clean_rng(derive_seed(seed, 0, 0));
  std::mt19937_64 noise_rng(derive_seed(seed, 1, 0));
  std::vector<double> samples;
  std::vector<double> noise;
  draw_clean(packet, hypothesis, n, clean_rng, samples);
  draw_standard_normal(n, noise_rng, noise);
  for (std::size_t i = 0; i < n; ++i) samples[i] += noise_dk * noise[i];
  return samples;
}

DiscriminationResult discriminate(std::span<const double> samples,
                                  const SuperposedWavepacket& packet, double noise_dk) {
  packet.validate();
  if (samples.empty()) throw InvalidInput("discriminate needs at least one sample");
  const NoiseModel m = noise_model(packet, noise_dk);
  DiscriminationResult r;
  r.n_samples = samples.size();
  r.noise_dk = noise_dk;
  LlrAccumulator acc{packet, m};
  for (double k : samples) acc.add(k);
  r.log_likelihood_ratio = acc.llr;
  r.decision = acc.coherent() ? Hypothesis::coherent : Hypothesis::mixed;
  return r;
}

PowerCurve estimate_power_curve(const SuperposedWavepacket& packet,
                                std::span<const double> noise_levels, std::size_t n_samples,
                                std::size_t trials, std::uint64_t root_seed) {
  packet.validate();
  if (n_samples == 0 || trials == 0) throw InvalidInput("need at least one sample and one trial");
  std::vector<NoiseModel> models;
  for (double level : noise_levels) models.push_back(noise_model(packet, level));

  // hits[t][j]: did trial t decide "coherent" at noise level j.
  std::vector<std::vector<char>> hits(trials, std::vector<char>(models.size(), 0));
  parallel_for(trials, [&](std::size_t t) {
    std::mt19937_64 clean_rng(derive_seed(root_seed, 0, t));
    std::mt19937_64 noise_rng(derive_seed(root_seed, 1, t));
    std::vector<double> clean;
    std::vector<double> z;
    draw_clean(packet, Hypothesis::coherent, n_samples, clean_rng, clean);
    draw_standard_normal(n_samples, noise_rng, z);
    for (std::size_t j = 0; j < models.size(); ++j) {
      LlrAccumulator acc{packet, models[j]};
      for (std::size_t i = 0; i < n_samples; ++i) acc.add(clean[i] + noise_levels[j] * z[i]);
      hits[t][j] = acc.coherent();
    }
  });

  PowerCurve curve;
  curve.noise_dk.assign(noise_levels.begin(), noise_levels.end());
  curve.power.assign(models.size(), 0.0);
  curve.trials = trials;
  curve.n_samples = n_samples;
  for (const auto& row : hits) {
    for (std::size_t j = 0; j < row.size(); ++j) curve.power[j] += row[j];
  }
  for (double& p : curve.power) p /= static_cast<double>(trials);
  return curve;
}

DiscriminationResult estimate_power(const SuperposedWavepacket& packet, double noise_dk,
                                    std::size_t n_samples, std::size_t trials,
                                    std::uint64_t root_seed) {
  const double level[] = {noise_dk};
  const PowerCurve curve = estimate_power_curve(packet, level, n_samples, trials, root_seed);
  DiscriminationResult r =
      discriminate(sample_momenta(packet, Hypothesis::coherent, n_samples, noise_dk, root_seed),
                   packet, noise_dk);
  r.power_estimate = curve.power.front();
  return r;
}

SpinOutcome spin_protocol(double charge, double d, double t0, bool collapsed, double kappa,
                          const PhysicalConstants& k) {
  if (!(kappa > 0.0)) throw InvalidInput("kappa must be positive");
  const double overlap = vacuum_overlap(TrajectoryProfile::sin_squared(d, t0), charge, k);
  const double coherence = collapsed ? 0.0 : std::pow(overlap, kappa);
  SpinOutcome out{};
  out.state = {{{0.5, 0.5 * coherence}, {0.5 * coherence, 0.5}}};
  out.visibility = 2.0 * std::abs(out.state[0][1]);
  // <+|rho|+> with |+> = (|up> + |down>) / sqrt(2).
  std::complex<double> plus = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) plus += 0.5 * out.state[i][j];
  }
  out.p_plus = plus.real();
  out.p_minus = 1.0 - out.p_plus;
  return out;
}

double spin_protocol_visibility(double charge, double d, double t0, double kappa,
                                const PhysicalConstants& k) {
  return spin_protocol(charge, d, t0, false, kappa, k).visibility;
}

}  // namespace supertime
