// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace avqe {

/// Returns f(theta) and writes the gradient into grad.
using Objective = std::function<double(std::span<const double> theta, std::span<double> grad)>;

struct OptimizationResult {
  std::vector<double> theta_opt;
  double energy = 0.0;
  double grad_inf_norm = 0.0;
  std::size_t n_iterations = 0;
  std::size_t n_energy_evals = 0;
  bool converged = false;
  std::string message;
};

struct BfgsOptions {
  double gtol = 1e-9;
  std::size_t max_iter = 0;  // 0: 10 * n + 200
  double c1 = 1e-4;
  double c2 = 0.9;
  std::size_t max_line_search_evals = 40;
  /// Energy differences below f_noise * max(1, |f|) are treated as round-off
  /// when testing decrease, so the search can still make progress on the
  /// gradient once the energy has converged to machine precision.
  double f_noise = 1e-14;
};

/// Thrown when the objective returns a non-finite energy or gradient.
class OptimizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// BFGS with inverse-Hessian updates (H0 = I) and a strong-Wolfe line search
/// using cubic interpolation. A failed line search returns the last accepted
/// iterate with converged = false.
[[nodiscard]] OptimizationResult minimize(const Objective& objective, std::vector<double> theta0,
                                          const BfgsOptions& options = {});

}  // namespace avqe
