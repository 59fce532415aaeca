#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supertime/causality.hpp"
#include "supertime/units.hpp"

namespace supertime {

enum class SweepScale { linear, log };

struct Sweep {
  std::string parameter;  // R, bob_mass, bob_charge, sigma, alice.magnitude, alice.separation_d
  double min = 0.0;
  double max = 0.0;
  std::size_t points = 1;
  SweepScale scale = SweepScale::linear;

  std::vector<double> values() const;
};

struct EchoSettings {
  std::optional<double> t_max;  // s; defaults to 3 T_B
  double t_max_factor = 3.0;    // multiple of T_B when t_max is absent
  std::size_t points = 16;
  std::size_t oracle_steps = 64;
};

struct CausalitySettings {
  std::optional<double> T_A;  // s; defaults to T_A_factor * sharp_min_time
  double T_A_factor = 1.0;
};

struct RadiationSettings {
  std::optional<double> t0;  // s; defaults to t0_factor * min_radiationless_time
  double t0_factor = 1.0;
  std::optional<std::string> trajectory;  // two-column CSV (t s, x m)
};

struct VacuumSettings {
  std::optional<double> T;  // s; defaults to min_measurement_time
  std::optional<std::string> window;  // two-column CSV (t s, phi 1/s)
};

struct InterferenceSettings {
  std::optional<double> sigma;  // m; defaults to separation / 20
  double phase = 0.0;
  std::size_t n_samples = 10000;
  std::size_t trials = 100;
  std::vector<double> noise_multiples = {0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0};  // of pi/d
};

struct RunConfig {
  PhysicalConstants constants;
  Scenario scenario;
  std::optional<Sweep> sweep;
  std::uint64_t seed = 0;
  std::optional<std::string> output;
  EchoSettings echo;
  CausalitySettings causality;
  RadiationSettings radiation;
  VacuumSettings vacuum;
  InterferenceSettings interference;
  std::string source_text;  // the JSON the config was parsed from
};

/// Parses and validates a JSON run configuration. Unknown keys, wrong types
/// and invariant violations raise InvalidInput naming the offending path.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

/// One scenario per sweep point (a single one without a sweep); each has the
/// swept parameter applied and is validated.
std::vector<Scenario> expand_sweep(const RunConfig& config);

/// Sets a named scalar field of the scenario.
void set_parameter(Scenario& scenario, std::string_view name, double value);
bool is_sweep_parameter(std::string_view name);

}  // namespace supertime
