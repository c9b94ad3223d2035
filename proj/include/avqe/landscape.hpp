// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file landscape.hpp
 * @brief Random-restart trap enumeration and hypercube gradient-variance sampling.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avqe/adapt.hpp"
#include "avqe/optimizer.hpp"
#include "avqe/pool.hpp"
#include "avqe/statesim.hpp"

namespace avqe {

enum class InitKind { recycled, zero, random };

[[nodiscard]] std::string_view to_string(InitKind k);

struct RestartRecord {
  std::size_t ansatz_length = 0;
  InitKind init_kind = InitKind::random;
  std::uint64_t seed = 0;  // 0 for the deterministic recycled/zero starts
  std::vector<double> theta_init;
  double init_energy = 0.0;
  double energy_opt = std::numeric_limits<double>::quiet_NaN();
  double fci_error = std::numeric_limits<double>::quiet_NaN();
  bool converged = false;
  std::size_t n_iterations = 0;
  std::string error;  // optimizer failure message, empty on success
};

struct ScanSpec {
  /// Full operator sequence; length L uses the first L entries.
  std::vector<std::size_t> op_indices;
  std::size_t repetition = 1;
  std::vector<std::size_t> lengths;
  /// optimized_thetas[L - 1] is the optimum at length L (collated layout).
  /// When empty, the recycled chain is built by this scan itself.
  std::vector<std::vector<double>> optimized_thetas;
};

struct ScanOptions {
  std::size_t n_random = 300;
  std::uint64_t master_seed = 1;
  std::size_t threads = 1;  // 0: hardware concurrency
  BfgsOptions optimizer;
  double reference_energy = std::numeric_limits<double>::quiet_NaN();
};

/// Seed of random restart idx at length L.
[[nodiscard]] std::uint64_t restart_seed(std::uint64_t master, std::size_t length, std::size_t idx);

/// Uniform angles in [0, 2pi) drawn from the given seed.
[[nodiscard]] std::vector<double> random_angles(std::uint64_t seed, std::size_t n);

/// Optimizes the recycled, zero and n_random random starts at every length.
/// Records are grouped by length in spec order, each group ordered recycled,
/// zero, then random by restart index. Output does not depend on threads.
[[nodiscard]] std::vector<RestartRecord> scan_ansatz(const Observable& h, const OperatorPool& pool,
                                                     const StateVector& ref, const ScanSpec& spec,
                                                     const ScanOptions& opt);

[[nodiscard]] std::vector<RestartRecord> scan_ansatz(const Observable& h, const OperatorPool& pool,
                                                     const StateVector& ref, const AdaptTrace& trace,
                                                     std::vector<std::size_t> lengths, const ScanOptions& opt);

struct TrapCluster {
  double representative = 0.0;  // lowest member energy
  std::size_t count = 0;
  double spread = 0.0;
};

/// Groups converged records by optimized energy. Sorted energies are covered
/// greedily by windows [e, e + tol], which keeps every spread within tol and
/// makes the cluster count non-decreasing as records are added.
[[nodiscard]] std::vector<TrapCluster> cluster_traps(std::span<const RestartRecord> records, double tol = 1e-8);
[[nodiscard]] std::vector<TrapCluster> cluster_energies(std::vector<double> energies, double tol = 1e-8);

[[nodiscard]] double median(std::vector<double> v);

struct VarianceScan {
  std::vector<double> widths;
  std::vector<double> variances;
  std::size_t samples_per_width = 0;
  std::vector<double> center;
};

/// For each half-width w, samples theta uniformly in [center - w, center + w)^d
/// and reports the sample variance of all pooled gradient components.
[[nodiscard]] VarianceScan variance_scan(const Observable& h, const OperatorPool& pool, const StateVector& ref,
                                         const Ansatz& ansatz, std::span<const double> widths,
                                         std::size_t samples_per_width, std::uint64_t master_seed,
                                         std::size_t threads = 1);

}  // namespace avqe
