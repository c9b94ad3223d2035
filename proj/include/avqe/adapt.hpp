// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file adapt.hpp
 * @brief ADAPT-VQE driver, its ADAPT^N overparametrized variant and ansatz shuffling.
 *
 * Each iteration screens the pool with <psi|[H, A_i]|psi>, appends the operator
 * of largest magnitude (N collated copies for ADAPT^N, all new angles zero),
 * and re-optimizes every parameter with BFGS starting from the previous optimum.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "avqe/optimizer.hpp"
#include "avqe/pool.hpp"
#include "avqe/statesim.hpp"

namespace avqe {

enum class Criterion { max, l2 };

struct AdaptConfig {
  double eps = 1e-6;
  std::size_t max_ops = 200;
  Criterion criterion = Criterion::max;
  std::size_t repetition = 1;
  /// false: every VQE starts from theta = 0 (the HF guess).
  bool recycle = true;
  BfgsOptions optimizer;
  /// Exact ground energy used for fci_error; NaN when unknown.
  double reference_energy = std::numeric_limits<double>::quiet_NaN();

  void validate() const;
};

struct AdaptIteration {
  std::size_t chosen_op = 0;
  std::string op_label;
  double max_pool_gradient = 0.0;  // signed gradient of the chosen operator
  double pool_gradient_l2 = 0.0;
  double energy = 0.0;
  double fci_error = 0.0;
  std::vector<double> theta;
  /// Gradient at the warm start: largest |dE/dtheta| over carried-over
  /// parameters, and the gradient of the newly added parameter(s).
  double start_prev_grad_inf = 0.0;
  std::vector<double> start_new_grad;
  std::size_t vqe_iterations = 0;
  bool vqe_converged = false;
};

struct AdaptTrace {
  std::vector<AdaptIteration> iterations;
  Ansatz ansatz;
  double reference_state_energy = 0.0;
  double reference_energy = std::numeric_limits<double>::quiet_NaN();
  /// Pool gradients measured after the final iteration.
  double final_max_gradient = 0.0;
  double final_gradient_l2 = 0.0;
  bool converged = false;
  std::string stop_reason;
};

/// Raised when an optimization aborts; carries the trace up to that point.
class AdaptAborted : public std::runtime_error {
 public:
  AdaptAborted(const std::string& msg, AdaptTrace partial) : std::runtime_error(msg), trace_(std::move(partial)) {}
  [[nodiscard]] const AdaptTrace& trace() const noexcept { return trace_; }

 private:
  AdaptTrace trace_;
};

using AdaptCallback = std::function<void(const AdaptTrace&)>;

/// Runs ADAPT-VQE. on_iteration, if set, is invoked after every completed iteration.
[[nodiscard]] AdaptTrace run_adapt(const Observable& h, const OperatorPool& pool, const StateVector& ref,
                                   const AdaptConfig& cfg, const AdaptCallback& on_iteration = {});

/// Index of the largest |g_i|; values within 1e-12 of the best keep the lower index.
[[nodiscard]] std::size_t tie_break(std::span<const double> g);

/// Permutes op_indices with a seeded Fisher-Yates shuffle (seed 0 is the
/// identity permutation) and resets every angle to init_theta.
[[nodiscard]] Ansatz shuffle_ansatz(const Ansatz& a, std::uint64_t seed, double init_theta = 0.0);

/// Inclusive index spans of dip-and-recovery: |g[k]| lies below some earlier
/// value and below some later value of |g|.
[[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> detect_gradient_trough(std::span<const double> series);
[[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> detect_gradient_trough(const AdaptTrace& trace);

}  // namespace avqe
