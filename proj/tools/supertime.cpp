#include <CLI11.hpp>
#include <iostream>
#include <vector>

#include "supertime/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Minimum discrimination times for macroscopic superpositions"};
  app.set_version_flag("--version", std::string(supertime::kVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string output;
  std::uint64_t seed = 0;
  bool oracle = false;
  std::size_t n_samples = 0;
  std::size_t trials = 0;
  std::vector<double> noise;

  for (auto sub : {supertime::Subcommand::bound, supertime::Subcommand::echo,
                   supertime::Subcommand::causality, supertime::Subcommand::radiation,
                   supertime::Subcommand::vacuum, supertime::Subcommand::interference}) {
    auto* cmd = app.add_subcommand(std::string(supertime::to_string(sub)));
    cmd->add_option("--config", config_path, "JSON run configuration")->required();
    cmd->add_option("--output", output, "CSV output path (metadata goes to <path>.meta.json)");
    cmd->add_option("--seed", seed, "Override the configured seed");
    if (sub == supertime::Subcommand::echo) {
      cmd->add_flag("--oracle", oracle, "Add grid-propagation overlaps next to the closed form");
    }
    if (sub == supertime::Subcommand::interference) {
      cmd->add_option("-n,--samples", n_samples, "Momentum samples per trial")
          ->check(CLI::PositiveNumber);
      cmd->add_option("--trials", trials, "Trials per noise level")->check(CLI::PositiveNumber);
      cmd->add_option("--noise", noise, "Noise levels as multiples of pi/d (repeatable)")
          ->check(CLI::NonNegativeNumber);
    }
  }

  CLI11_PARSE(app, argc, argv);

  const auto* chosen = app.get_subcommands().front();
  const auto sub = *supertime::parse_subcommand(chosen->get_name());
  supertime::RunOptions options;
  if (chosen->count("--output")) options.output = output;
  if (chosen->count("--seed")) options.seed = seed;
  options.oracle = oracle;

  try {
    auto config = supertime::load_config(config_path);
    if (sub == supertime::Subcommand::interference) {
      if (chosen->count("--samples")) config.interference.n_samples = n_samples;
      if (chosen->count("--trials")) config.interference.trials = trials;
      if (chosen->count("--noise")) config.interference.noise_multiples = noise;
    }
    return supertime::run(sub, std::move(config), options, std::cerr);
  } catch (...) {
    return supertime::report_current_exception(std::cerr);
  }
}
