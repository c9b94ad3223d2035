// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file experiment.hpp
 * @brief Config-driven experiment runner behind the avqe command line tool.
 *
 * A config is flat "key = value" text; '#' starts a comment. Every run writes
 * its CSV files plus a run.meta sidecar holding the resolved config into the
 * output directory.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "avqe/adapt.hpp"
#include "avqe/hamio.hpp"
#include "avqe/pool.hpp"
#include "avqe/statesim.hpp"

namespace avqe {

enum class Mode { adapt, adaptn, landscape, variance, reorder, fci };

[[nodiscard]] Mode parse_mode(std::string_view s);
[[nodiscard]] std::string_view to_string(Mode m);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string system;
  Mode mode = Mode::adapt;
  double eps = 1e-6;
  std::size_t max_ops = 200;
  Criterion criterion = Criterion::max;
  bool recycle = true;
  std::optional<std::size_t> repetition;  // "N"
  std::size_t n_random = 300;
  std::vector<std::size_t> lengths;  // empty: every length of the trace
  std::vector<double> widths;        // empty: default set
  std::size_t samples_per_width = 100;
  std::size_t variance_ops = 0;  // 0: full trace
  std::vector<std::uint64_t> seeds = {1, 2, 3};
  std::uint64_t seed = 1;
  std::size_t spectrum_states = 1;
  double gtol = 1e-9;
  std::size_t threads = 1;
  std::string output = "out";
  std::string fixtures_dir;  // empty: built-in fixture directory

  /// Parses "key = value" lines. Unknown keys and bad values raise ConfigError.
  [[nodiscard]] static ExperimentConfig parse(std::string_view text);
  [[nodiscard]] static ExperimentConfig load(const std::string& path);

  /// Throws ConfigError when a mode-specific field is missing or inconsistent.
  void validate() const;
  /// Canonical text form; parse(to_text()) reproduces the config.
  [[nodiscard]] std::string to_text() const;
  [[nodiscard]] std::size_t n_rep() const { return repetition.value_or(1); }
  [[nodiscard]] std::string fixture_path() const;
};

/// Parses a comma-separated list of angles such as "pi/8, 0.5, 2*pi".
[[nodiscard]] std::vector<double> parse_angle_list(std::string_view s);
/// Parses "1-5,8,10" into {1,2,3,4,5,8,10}.
[[nodiscard]] std::vector<std::size_t> parse_index_list(std::string_view s);

[[nodiscard]] std::string default_fixture_dir();

/// Everything derived from one fixture: integrals, qubit Hamiltonian, pool,
/// HF reference and exact ground energy.
struct Problem {
  std::string name;
  MolecularHamiltonian molecule;
  Observable hamiltonian;
  OperatorPool pool;
  StateVector reference;
  double hf_energy = 0.0;
  double fci_energy = 0.0;
};

[[nodiscard]] Problem load_problem(const std::string& fcidump_path, std::string name = {});

/// Runs one experiment and writes its artifacts. Progress goes to log.
/// Throws on any error.
void run_experiment(const ExperimentConfig& cfg, std::ostream& log);

/// CSV emission, exposed for tests and tools.
void write_adapt_trace_csv(std::ostream& out, const AdaptTrace& trace);
[[nodiscard]] std::string format_double(double v);

struct FixtureCheck {
  std::string name;
  bool ok = false;
  double e_hf = 0.0;
  double e_fci = 0.0;
  std::string message;
};

struct FixtureReport {
  std::vector<FixtureCheck> checks;
  [[nodiscard]] bool ok() const;
};

/// Recomputes HF and FCI energies of every fixture in manifest.json and
/// compares them with the stored values (tol 1e-8). Throws std::runtime_error
/// with "no fixtures" when the directory holds none.
[[nodiscard]] FixtureReport verify_fixtures(const std::string& dir, double tol = 1e-8);

}  // namespace avqe
