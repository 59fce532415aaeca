#include "supertime/config.hpp"

#include <cmath>
#include <fstream>
#include "json.hpp"
#include <set>
#include <sstream>

#include "supertime/errors.hpp"

namespace supertime {
namespace {

using nlohmann::json;

class Reader {
 public:
  Reader(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) fail(path_, "expected an object");
  }

  /// Rejects any key outside `allowed`.
  void only(std::initializer_list<std::string_view> allowed) const {
    const std::set<std::string_view> ok(allowed);
    for (const auto& item : node_.items()) {
      if (!ok.count(item.key())) fail(child(item.key()), "unknown key");
    }
  }

  bool has(const std::string& key) const { return node_.contains(key); }

  double number(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }
  double number(const std::string& key) const {
    const json& v = at(key);
    if (!v.is_number()) fail(child(key), "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(child(key), "must be finite");
    return x;
  }
  std::optional<double> optional_number(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return number(key);
  }
  std::size_t count(const std::string& key, std::size_t fallback) const {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
      fail(child(key), "expected a positive integer");
    }
    return v.get<std::size_t>();
  }
  std::string text(const std::string& key) const {
    const json& v = at(key);
    if (!v.is_string()) fail(child(key), "expected a string");
    return v.get<std::string>();
  }
  std::optional<std::string> optional_text(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return text(key);
  }
  Reader object(const std::string& key) const { return Reader(at(key), child(key)); }
  const json& at(const std::string& key) const {
    if (!has(key)) fail(child(key), "missing required key");
    return node_.at(key);
  }
  std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  [[noreturn]] static void fail(const std::string& path, const std::string& what) {
    throw InvalidInput("config: " + path + ": " + what);
  }

 private:
  const json& node_;
  std::string path_;
};

PhysicalConstants read_constants(const Reader& r) {
  r.only({"hbar", "c", "G", "epsilon0", "e_charge"});
  PhysicalConstants k;
  k.hbar = r.number("hbar", k.hbar);
  k.c = r.number("c", k.c);
  k.G = r.number("G", k.G);
  k.epsilon0 = r.number("epsilon0", k.epsilon0);
  k.e_charge = r.number("e_charge", k.e_charge);
  try {
    k.validate();
  } catch (const InvalidInput& e) {
    Reader::fail("constants", e.what());
  }
  return k;
}

SuperpositionSpec read_alice(const Reader& r) {
  r.only({"kind", "magnitude", "separation_d"});
  SuperpositionSpec s;
  const std::string kind = r.text("kind");
  if (kind == "mass") {
    s.kind = SuperpositionKind::mass;
  } else if (kind == "charge") {
    s.kind = SuperpositionKind::charge;
  } else {
    Reader::fail(r.child("kind"), "expected \"mass\" or \"charge\", got \"" + kind + "\"");
  }
  s.magnitude = r.number("magnitude");
  s.separation_d = r.number("separation_d");
  return s;
}

Scenario read_scenario(const Reader& r) {
  r.only({"alice", "bob_mass", "bob_charge", "R", "sigma"});
  Scenario s;
  s.alice = read_alice(r.object("alice"));
  s.bob_mass = r.number("bob_mass", s.bob_mass);
  s.bob_charge = r.number("bob_charge", s.bob_charge);
  s.R = r.number("R", s.R);
  s.sigma = r.optional_number("sigma");
  return s;
}

Sweep read_sweep(const Reader& r) {
  r.only({"parameter", "min", "max", "points", "scale"});
  Sweep s;
  s.parameter = r.text("parameter");
  if (!is_sweep_parameter(s.parameter)) {
    Reader::fail(r.child("parameter"), "\"" + s.parameter + "\" is not a scalar scenario field");
  }
  s.min = r.number("min");
  s.max = r.number("max");
  s.points = r.count("points", 2);
  const std::string scale = r.has("scale") ? r.text("scale") : "linear";
  if (scale == "linear") {
    s.scale = SweepScale::linear;
  } else if (scale == "log") {
    s.scale = SweepScale::log;
    if (!(s.min > 0.0 && s.max > 0.0)) Reader::fail(r.child("min"), "log sweep needs positive bounds");
  } else {
    Reader::fail(r.child("scale"), "expected \"linear\" or \"log\"");
  }
  if (s.points == 1 && s.min != s.max) Reader::fail(r.child("points"), "one point needs min == max");
  return s;
}

EchoSettings read_echo(const Reader& r) {
  r.only({"t_max", "t_max_factor", "points", "oracle_steps"});
  EchoSettings e;
  e.t_max = r.optional_number("t_max");
  e.t_max_factor = r.number("t_max_factor", e.t_max_factor);
  e.points = r.count("points", e.points);
  e.oracle_steps = r.count("oracle_steps", e.oracle_steps);
  if (e.t_max && !(*e.t_max > 0.0)) Reader::fail(r.child("t_max"), "must be positive");
  if (!(e.t_max_factor > 0.0)) Reader::fail(r.child("t_max_factor"), "must be positive");
  return e;
}

CausalitySettings read_causality(const Reader& r) {
  r.only({"T_A", "T_A_factor"});
  CausalitySettings c;
  c.T_A = r.optional_number("T_A");
  c.T_A_factor = r.number("T_A_factor", c.T_A_factor);
  if (c.T_A && *c.T_A < 0.0) Reader::fail(r.child("T_A"), "must be non-negative");
  if (c.T_A_factor < 0.0) Reader::fail(r.child("T_A_factor"), "must be non-negative");
  return c;
}

RadiationSettings read_radiation(const Reader& r) {
  r.only({"t0", "t0_factor", "trajectory"});
  RadiationSettings s;
  s.t0 = r.optional_number("t0");
  s.t0_factor = r.number("t0_factor", s.t0_factor);
  s.trajectory = r.optional_text("trajectory");
  if (s.t0 && !(*s.t0 > 0.0)) Reader::fail(r.child("t0"), "must be positive");
  if (!(s.t0_factor > 0.0)) Reader::fail(r.child("t0_factor"), "must be positive");
  return s;
}

VacuumSettings read_vacuum(const Reader& r) {
  r.only({"T", "window"});
  VacuumSettings v;
  v.T = r.optional_number("T");
  v.window = r.optional_text("window");
  if (v.T && !(*v.T > 0.0)) Reader::fail(r.child("T"), "must be positive");
  return v;
}

InterferenceSettings read_interference(const Reader& r) {
  r.only({"sigma", "phase", "n_samples", "trials", "noise_multiples"});
  InterferenceSettings s;
  s.sigma = r.optional_number("sigma");
  s.phase = r.number("phase", s.phase);
  s.n_samples = r.count("n_samples", s.n_samples);
  s.trials = r.count("trials", s.trials);
  if (s.sigma && !(*s.sigma > 0.0)) Reader::fail(r.child("sigma"), "must be positive");
  if (r.has("noise_multiples")) {
    const json& list = r.at("noise_multiples");
    if (!list.is_array() || list.empty()) {
      Reader::fail(r.child("noise_multiples"), "expected a non-empty array of numbers");
    }
    s.noise_multiples.clear();
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = r.child("noise_multiples") + "[" + std::to_string(i) + "]";
      if (!list[i].is_number() || !(list[i].get<double>() >= 0.0)) {
        Reader::fail(path, "expected a non-negative number");
      }
      s.noise_multiples.push_back(list[i].get<double>());
    }
  }
  return s;
}

}  // namespace

std::vector<double> Sweep::values() const {
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = min;
    return out;
  }
  for (std::size_t i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(points - 1);
    out[i] = scale == SweepScale::log ? std::pow(10.0, std::log10(min) + f * (std::log10(max) - std::log10(min)))
                                      : min + f * (max - min);
  }
  out.front() = min;
  out.back() = max;
  return out;
}

bool is_sweep_parameter(std::string_view name) {
  return name == "R" || name == "bob_mass" || name == "bob_charge" || name == "sigma" ||
         name == "alice.magnitude" || name == "alice.separation_d";
}

void set_parameter(Scenario& s, std::string_view name, double value) {
  if (name == "R") {
    s.R = value;
  } else if (name == "bob_mass") {
    s.bob_mass = value;
  } else if (name == "bob_charge") {
    s.bob_charge = value;
  } else if (name == "sigma") {
    s.sigma = value;
  } else if (name == "alice.magnitude") {
    s.alice.magnitude = value;
  } else if (name == "alice.separation_d") {
    s.alice.separation_d = value;
  } else {
    throw InvalidInput("unknown sweep parameter '" + std::string(name) + "'");
  }
}

RunConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("config: malformed JSON: ") + e.what());
  }
  const Reader r(root, "");
  r.only({"constants", "scenario", "sweep", "seed", "output", "echo", "causality", "radiation",
          "vacuum", "interference"});

  RunConfig cfg;
  cfg.source_text = std::string(text);
  if (r.has("constants")) cfg.constants = read_constants(r.object("constants"));
  cfg.scenario = read_scenario(r.object("scenario"));
  if (r.has("sweep")) cfg.sweep = read_sweep(r.object("sweep"));
  if (r.has("seed")) {
    const json& v = r.at("seed");
    if (!v.is_number_unsigned()) Reader::fail("seed", "expected a non-negative integer");
    cfg.seed = v.get<std::uint64_t>();
  }
  cfg.output = r.optional_text("output");
  if (r.has("echo")) cfg.echo = read_echo(r.object("echo"));
  if (r.has("causality")) cfg.causality = read_causality(r.object("causality"));
  if (r.has("radiation")) cfg.radiation = read_radiation(r.object("radiation"));
  if (r.has("vacuum")) cfg.vacuum = read_vacuum(r.object("vacuum"));
  if (r.has("interference")) cfg.interference = read_interference(r.object("interference"));

  try {
    cfg.scenario.validate(cfg.constants);
  } catch (const InvalidInput& e) {
    if (!cfg.sweep) Reader::fail("scenario", e.what());
  }
  // Swept points are validated one by one in expand_sweep.
  if (cfg.sweep) expand_sweep(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::vector<Scenario> expand_sweep(const RunConfig& config) {
  if (!config.sweep) return {config.scenario};
  std::vector<Scenario> out;
  const auto values = config.sweep->values();
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    Scenario s = config.scenario;
    set_parameter(s, config.sweep->parameter, values[i]);
    try {
      s.validate(config.constants);
    } catch (const InvalidInput& e) {
      throw InvalidInput("config: sweep point " + std::to_string(i) + " (" +
                         config.sweep->parameter + " = " + std::to_string(values[i]) +
                         "): " + e.what());
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace supertime
