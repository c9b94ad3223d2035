// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

// avqe: run ADAPT-VQE landscape experiments from a config file.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "avqe/experiment.hpp"
#include "avqe/pool.hpp"

namespace {

struct Flags {
  std::string config;
  std::string system;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  std::string out;
  std::string fixtures;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "Experiment config file (key = value)")->check(CLI::ExistingFile);
  cmd->add_option("--system", f.system, "Fixture name, overrides the config");
  cmd->add_option("--seed", f.seed, "Master seed, overrides the config");
  cmd->add_option("--threads", f.threads, "Worker thread cap for restart scans");
  cmd->add_option("--out", f.out, "Output directory, overrides the config");
  cmd->add_option("--fixtures", f.fixtures, "Fixture directory");
}

int run_mode(avqe::Mode mode, const Flags& f, const CLI::App& cmd) {
  avqe::ExperimentConfig cfg = f.config.empty() ? avqe::ExperimentConfig{} : avqe::ExperimentConfig::load(f.config);
  cfg.mode = mode;
  if (!f.system.empty()) cfg.system = f.system;
  if (cmd.count("--seed")) cfg.seed = f.seed;
  if (cmd.count("--threads")) cfg.threads = f.threads;
  if (!f.out.empty()) cfg.output = f.out;
  if (!f.fixtures.empty()) cfg.fixtures_dir = f.fixtures;
  avqe::run_experiment(cfg, std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ADAPT-VQE landscape experiments on exactly simulated molecules"};
  app.require_subcommand(1);

  Flags flags;
  const std::pair<const char*, avqe::Mode> modes[] = {
      {"adapt", avqe::Mode::adapt},       {"adaptn", avqe::Mode::adaptn},   {"landscape", avqe::Mode::landscape},
      {"variance", avqe::Mode::variance}, {"reorder", avqe::Mode::reorder}, {"fci", avqe::Mode::fci}};
  std::vector<std::pair<CLI::App*, avqe::Mode>> mode_cmds;
  for (const auto& [name, mode] : modes) {
    CLI::App* cmd = app.add_subcommand(name, fmt::format("Run the {} experiment", name));
    add_common(cmd, flags);
    mode_cmds.emplace_back(cmd, mode);
  }

  std::string fixture_dir = avqe::default_fixture_dir();
  CLI::App* verify = app.add_subcommand("verify-fixtures", "Recompute fixture HF/FCI energies against the manifest");
  verify->add_option("--fixtures", fixture_dir, "Fixture directory");

  std::string pool_system;
  std::string pool_fixtures = avqe::default_fixture_dir();
  CLI::App* pool = app.add_subcommand("pool", "Print the operator pool manifest of a fixture");
  pool->add_option("--system", pool_system, "Fixture name")->required();
  pool->add_option("--fixtures", pool_fixtures, "Fixture directory");

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& [cmd, mode] : mode_cmds)
      if (cmd->parsed()) return run_mode(mode, flags, *cmd);

    if (verify->parsed()) {
      const avqe::FixtureReport report = avqe::verify_fixtures(fixture_dir);
      for (const auto& c : report.checks)
        fmt::print("{:<12} {}  HF {:.12f}  FCI {:.12f}{}\n", c.name, c.ok ? "ok  " : "FAIL", c.e_hf, c.e_fci,
                   c.message.empty() ? "" : "  " + c.message);
      return report.ok() ? 0 : 1;
    }

    if (pool->parsed()) {
      const avqe::MolecularHamiltonian m = avqe::load_fcidump(pool_fixtures + "/" + pool_system + ".fcidump");
      avqe::write_pool_manifest(std::cout, avqe::build_uccsd_pool(2 * m.n_spatial, m.n_electrons, m.ms2));
      return 0;
    }
  } catch (const std::exception& e) {
    fmt::print(stderr, "avqe: {}\n", e.what());
    return 1;
  }
  return 1;
}
