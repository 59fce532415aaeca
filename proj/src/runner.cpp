#include "supertime/runner.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include "json.hpp"
#include "supertime/csv.hpp"
#include "supertime/errors.hpp"
#include "supertime/interference.hpp"
#include "supertime/oracle.hpp"
#include "supertime/parallel.hpp"
#include "supertime/radiation.hpp"
#include "supertime/vacuum.hpp"

namespace supertime {
namespace {

constexpr double pi = std::numbers::pi;
constexpr std::size_t kMaxOracleGrid = std::size_t{1} << 22;

using Row = std::vector<std::string>;
using csv::format;

std::string magnitude_column(const Scenario& s) {
  return s.alice.kind == SuperpositionKind::mass ? "alice_mass_kg" : "alice_charge_coulombs";
}

std::string sweep_column(const RunConfig& cfg) {
  const std::string& p = cfg.sweep->parameter;
  if (p == "R") return "sweep_R_meters";
  if (p == "bob_mass") return "sweep_bob_mass_kg";
  if (p == "bob_charge") return "sweep_bob_charge_coulombs";
  if (p == "sigma") return "sweep_sigma_meters";
  if (p == "alice.magnitude") return "sweep_" + magnitude_column(cfg.scenario);
  return "sweep_separation_d_meters";
}

double require_charge(const Scenario& s, std::string_view sub) {
  if (s.alice.kind != SuperpositionKind::charge) {
    throw InvalidInput(std::string(sub) + " needs a charged superposition (alice.kind = \"charge\")");
  }
  return s.alice.magnitude;
}

// Per-subcommand evaluation of one scenario.

Row bound_header(const Scenario& s) {
  return {"kind", magnitude_column(s), "separation_d_meters", "planck_ratio", "T_seconds",
          "T_sharp_seconds"};
}

std::vector<Row> bound_rows(const Scenario& s, const RunConfig& cfg) {
  const auto& k = cfg.constants;
  return {{s.alice.kind == SuperpositionKind::mass ? "mass" : "charge", format(s.alice.magnitude),
           format(s.alice.separation_d), format(planck_ratio(s.alice, k)),
           format(min_time(s.alice, k)), format(sharp_min_time(s.alice, k))}};
}

Row causality_header() {
  return {"R_meters",          "light_time_seconds", "T_B_seconds", "T_A_seconds",
          "T_A_bound_seconds", "eta",                "satisfied"};
}

std::vector<Row> causality_rows(const Scenario& s, const RunConfig& cfg) {
  const auto& k = cfg.constants;
  const double T_A = cfg.causality.T_A.value_or(cfg.causality.T_A_factor * sharp_min_time(s.alice, k));
  const TimelineReport r = audit_timeline(s, T_A, k);
  return {{format(s.R), format(s.R / k.c), format(r.T_B), format(r.T_A), format(r.T_A_bound),
           format(r.eta), r.satisfied ? "true" : "false"}};
}

Row echo_header(bool oracle) {
  Row h{"t_seconds", "delta_x_meters", "delta_p_kg_m_per_s", "cubic_phase_radians", "overlap"};
  if (oracle) {
    h.push_back("oracle_overlap");
    h.push_back("oracle_abs_difference");
  }
  return h;
}

// The oracle runs in units of sigma, m_B and m_B sigma^2 / hbar.
double oracle_overlap(const ForcePair& f, double m, double sigma, double t, std::size_t steps,
                      const PhysicalConstants& k) {
  const double time_unit = m * sigma * sigma / k.hbar;
  const double force_unit = k.hbar * k.hbar / (m * sigma * sigma * sigma);
  const double F_L = 0.5 * (f.sum() + f.delta_F) / force_unit;
  const double F_R = 0.5 * (f.sum() - f.delta_F) / force_unit;
  const double tt = t / time_unit;
  const GaussianState unit_packet{0.0, 0.0, 1.0};
  const oracle::GridSpec grid = oracle::grid_for_echo(unit_packet, {F_L, F_R}, 1.0, tt);
  if (grid.n_points > kMaxOracleGrid) {
    throw NumericalError("oracle grid would need " + std::to_string(grid.n_points) +
                         " points; shorten echo.t_max");
  }
  const auto psi0 = oracle::init_gaussian(grid, unit_packet);
  return std::abs(oracle::echo_overlap_numeric(psi0, F_L, F_R, 1.0, tt, steps));
}

std::vector<Row> echo_rows(const Scenario& s, const RunConfig& cfg, bool oracle) {
  const auto& k = cfg.constants;
  const ForcePair f = s.forces(k);
  const double sigma = s.bob_sigma(k);
  const GaussianState state{0.0, 0.0, sigma};
  const double t_max = cfg.echo.t_max.value_or(
      cfg.echo.t_max_factor * entanglement_time(std::abs(f.delta_F), s.bob_mass, sigma, k));
  const std::size_t n = cfg.echo.points;
  std::vector<Row> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = n == 1 ? t_max : t_max * static_cast<double>(i) / static_cast<double>(n - 1);
    EchoResult e = echo_displacements(f.delta_F, s.bob_mass, f.sum(), t, k);
    e.overlap = echo_overlap(state, e, k);
    Row row{format(t), format(e.delta_x), format(e.delta_p), format(e.cubic_phase),
            format(*e.overlap)};
    if (oracle) {
      const double numeric = oracle_overlap(f, s.bob_mass, sigma, t, cfg.echo.oracle_steps, k);
      row.push_back(format(numeric));
      row.push_back(format(std::abs(numeric - *e.overlap)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Row radiation_header() {
  return {"charge_coulombs", "d_meters", "t0_seconds", "t0_min_seconds", "exponent",
          "vacuum_overlap"};
}

std::vector<Row> radiation_rows(const Scenario& s, const RunConfig& cfg,
                                const std::optional<TrajectoryProfile>& tabulated) {
  const auto& k = cfg.constants;
  const double q = require_charge(s, "radiation");
  const TrajectoryProfile profile = [&] {
    if (tabulated) return *tabulated;
    const double d = s.alice.separation_d;
    const double t0 = cfg.radiation.t0.value_or(cfg.radiation.t0_factor * min_radiationless_time(q, d, k));
    return TrajectoryProfile::sin_squared(d, t0);
  }();
  const double exponent = mode_integral(profile, q, k);
  return {{format(q), format(profile.d()), format(profile.t0()),
           format(min_radiationless_time(q, profile.d(), k)), format(exponent),
           format(std::exp(-exponent))}};
}

Row vacuum_header() {
  return {"charge_coulombs",
          "d_meters",
          "T_seconds",
          "averaged_variance_natural",
          "momentum_error_kg_m_per_s",
          "required_precision_kg_m_per_s",
          "T_min_seconds",
          "resolvable"};
}

std::vector<Row> vacuum_rows(const Scenario& s, const RunConfig& cfg,
                             const std::optional<WindowFunction>& tabulated) {
  const auto& k = cfg.constants;
  const double q = require_charge(s, "vacuum");
  const double d = s.alice.separation_d;
  const double T_min = min_measurement_time(q, d, k);
  const WindowFunction window = tabulated ? *tabulated : WindowFunction::gaussian(cfg.vacuum.T.value_or(T_min));
  const double dp = momentum_error(q, window, k);
  const double need = required_precision(d, k);
  return {{format(q), format(d), format(window.width()), format(averaged_variance(window, k)),
           format(dp), format(need), format(T_min), dp <= need * (1.0 + 1e-12) ? "true" : "false"}};
}

Row interference_header() {
  return {"sigma_meters",       "d_meters",           "noise_multiple_of_pi_over_d",
          "noise_dk_per_meter", "noise_dp_kg_m_per_s", "power",
          "trials",             "n_samples"};
}

std::vector<Row> interference_rows(const Scenario& s, const RunConfig& cfg, std::size_t point) {
  const auto& k = cfg.constants;
  const auto& st = cfg.interference;
  const double d = s.alice.separation_d;
  const SuperposedWavepacket packet{st.sigma.value_or(d / 20.0), d, st.phase};
  packet.validate();
  std::vector<double> levels;
  for (double m : st.noise_multiples) levels.push_back(m * required_precision_wavenumber(d));
  const PowerCurve curve = estimate_power_curve(packet, levels, st.n_samples, st.trials,
                                                derive_seed(cfg.seed, 2, point));
  std::vector<Row> rows;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    rows.push_back({format(packet.sigma), format(d), format(st.noise_multiples[j]),
                    format(levels[j]), format(levels[j] * k.hbar), format(curve.power[j]),
                    std::to_string(curve.trials), std::to_string(curve.n_samples)});
  }
  return rows;
}

void write_metadata(const std::string& path, Subcommand sub, const RunConfig& cfg,
                    const RunOptions& options, const std::string& csv_path, const Table& table) {
  nlohmann::ordered_json meta;
  meta["tool"] = "supertime";
  meta["version"] = std::string(kVersion);
  meta["subcommand"] = std::string(to_string(sub));
  meta["seed"] = cfg.seed;
  meta["oracle"] = options.oracle;
  meta["csv"] = csv_path;
  meta["rows"] = table.rows.size();
  meta["constants"] = {{"hbar", cfg.constants.hbar},
                       {"c", cfg.constants.c},
                       {"G", cfg.constants.G},
                       {"epsilon0", cfg.constants.epsilon0},
                       {"e_charge", cfg.constants.e_charge}};
  meta["config"] = nlohmann::ordered_json::parse(cfg.source_text);
  if (sub == Subcommand::interference) {
    meta["interference"] = {{"n_samples", cfg.interference.n_samples},
                            {"trials", cfg.interference.trials},
                            {"noise_multiples", cfg.interference.noise_multiples}};
  }
  meta["warnings"] = table.warnings;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << meta.dump(2) << '\n';
}

}  // namespace

std::optional<Subcommand> parse_subcommand(std::string_view name) {
  for (auto sub : {Subcommand::bound, Subcommand::echo, Subcommand::causality,
                   Subcommand::radiation, Subcommand::vacuum, Subcommand::interference}) {
    if (to_string(sub) == name) return sub;
  }
  return std::nullopt;
}

std::string_view to_string(Subcommand sub) {
  switch (sub) {
    case Subcommand::bound: return "bound";
    case Subcommand::echo: return "echo";
    case Subcommand::causality: return "causality";
    case Subcommand::radiation: return "radiation";
    case Subcommand::vacuum: return "vacuum";
    case Subcommand::interference: return "interference";
  }
  return "unknown";
}

Table compute(Subcommand sub, const RunConfig& cfg, bool oracle) {
  const std::vector<Scenario> points = expand_sweep(cfg);
  Table table;
  switch (sub) {
    case Subcommand::bound: table.header = bound_header(cfg.scenario); break;
    case Subcommand::echo: table.header = echo_header(oracle); break;
    case Subcommand::causality: table.header = causality_header(); break;
    case Subcommand::radiation: table.header = radiation_header(); break;
    case Subcommand::vacuum: table.header = vacuum_header(); break;
    case Subcommand::interference: table.header = interference_header(); break;
  }
  table.header.insert(table.header.begin(), "point");
  if (cfg.sweep) table.header.insert(table.header.begin() + 1, sweep_column(cfg));

  std::optional<TrajectoryProfile> trajectory;
  if (sub == Subcommand::radiation && cfg.radiation.trajectory) {
    trajectory = TrajectoryProfile::tabulated(csv::read_two_column(*cfg.radiation.trajectory));
    if (cfg.sweep) table.warnings.push_back("tabulated trajectory overrides the swept d and t0");
  }
  std::optional<WindowFunction> window;
  if (sub == Subcommand::vacuum && cfg.vacuum.window) {
    window = WindowFunction::tabulated(csv::read_two_column(*cfg.vacuum.window));
  }

  std::vector<std::vector<Row>> blocks(points.size());
  auto evaluate = [&](std::size_t i) {
    const Scenario& s = points[i];
    switch (sub) {
      case Subcommand::bound: blocks[i] = bound_rows(s, cfg); break;
      case Subcommand::echo: blocks[i] = echo_rows(s, cfg, oracle); break;
      case Subcommand::causality: blocks[i] = causality_rows(s, cfg); break;
      case Subcommand::radiation: blocks[i] = radiation_rows(s, cfg, trajectory); break;
      case Subcommand::vacuum: blocks[i] = vacuum_rows(s, cfg, window); break;
      case Subcommand::interference: blocks[i] = interference_rows(s, cfg, i); break;
    }
  };
  if (sub == Subcommand::interference) {
    // The power curve is already parallel over trials.
    for (std::size_t i = 0; i < points.size(); ++i) evaluate(i);
  } else {
    parallel_for(points.size(), evaluate);
  }

  const std::vector<double> swept = cfg.sweep ? cfg.sweep->values() : std::vector<double>{};
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (auto& row : blocks[i]) {
      row.insert(row.begin(), std::to_string(i));
      if (cfg.sweep) row.insert(row.begin() + 1, format(swept[i]));
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

int report_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const InvalidInput& e) {
    err << "supertime: invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const ApproximationError& e) {
    err << "supertime: outside approximation validity: " << e.what() << '\n';
    return kExitApproximation;
  } catch (const DivergenceError& e) {
    err << "supertime: divergent integral: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const NumericalError& e) {
    err << "supertime: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "supertime: error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run(Subcommand sub, RunConfig config, const RunOptions& options, std::ostream& err) {
  try {
    if (options.seed) config.seed = *options.seed;
    const std::string csv_path = options.output.value_or(
        config.output.value_or("supertime_" + std::string(to_string(sub)) + ".csv"));
    const Table table = compute(sub, config, options.oracle);

    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + csv_path);
    csv::write_row(out, table.header);
    for (const auto& row : table.rows) csv::write_row(out, row);
    out.close();
    if (!out) throw InvalidInput("failed writing " + csv_path);

    write_metadata(csv_path + ".meta.json", sub, config, options, csv_path, table);
    for (const auto& w : table.warnings) err << "supertime: warning: " << w << '\n';
    return kExitOk;
  } catch (...) {
    return report_current_exception(err);
  }
}

}  // namespace supertime
