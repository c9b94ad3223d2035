// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "avqe/adapt.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "avqe/random.hpp"

namespace avqe {

void AdaptConfig::validate() const {
  if (!(eps > 0.0)) throw std::invalid_argument("AdaptConfig: eps must be positive");
  if (repetition < 1) throw std::invalid_argument("AdaptConfig: repetition must be >= 1");
}

std::size_t tie_break(std::span<const double> g) {
  if (g.empty()) throw std::invalid_argument("tie_break: empty gradient vector");
  std::size_t best = 0;
  for (std::size_t i = 1; i < g.size(); ++i)
    if (std::abs(g[i]) > std::abs(g[best]) + 1e-12) best = i;
  return best;
}

AdaptTrace run_adapt(const Observable& h, const OperatorPool& pool, const StateVector& ref, const AdaptConfig& cfg,
                     const AdaptCallback& on_iteration) {
  cfg.validate();
  const std::size_t n_rep = cfg.repetition;

  AdaptTrace trace;
  trace.ansatz.repetition = n_rep;
  trace.reference_energy = cfg.reference_energy;
  trace.reference_state_energy = energy(h, ref);

  StateVector state = ref;
  while (true) {
    const std::vector<double> g = pool.empty() ? std::vector<double>{} : pool_gradients(h, state, pool);
    double l2 = 0.0, gmax = 0.0;
    for (double v : g) {
      l2 += v * v;
      gmax = std::max(gmax, std::abs(v));
    }
    l2 = std::sqrt(l2);
    if (!std::isfinite(l2)) {
      trace.stop_reason = "non-finite pool gradient";
      throw AdaptAborted(trace.stop_reason, std::move(trace));
    }
    const double criterion = cfg.criterion == Criterion::max ? gmax : l2;
    trace.final_max_gradient = gmax;
    trace.final_gradient_l2 = l2;

    if (criterion < cfg.eps) {
      trace.converged = true;
      trace.stop_reason = fmt::format("pool gradient {} below eps {}", criterion, cfg.eps);
      break;
    }
    if (trace.ansatz.op_indices.size() >= cfg.max_ops) {
      trace.stop_reason = fmt::format("reached max_ops = {}", cfg.max_ops);
      break;
    }

    const std::size_t k = trace.ansatz.op_indices.size();
    const std::size_t chosen = tie_break(g);
    std::vector<double> theta0 = cfg.recycle ? extend_collated(trace.ansatz.theta, k, n_rep)
                                             : std::vector<double>((k + 1) * n_rep, 0.0);
    std::vector<std::size_t> ops = trace.ansatz.op_indices;
    ops.push_back(chosen);

    AnsatzEvaluator ev(h, pool, ref, ops, n_rep);
    AdaptIteration it;
    it.chosen_op = chosen;
    it.op_label = pool[chosen].label;
    it.max_pool_gradient = g[chosen];
    it.pool_gradient_l2 = l2;

    std::vector<double> grad0(ev.n_params());
    ev.energy_and_gradient(theta0, grad0);
    for (std::size_t b = 0; b < n_rep; ++b)
      for (std::size_t j = 0; j <= k; ++j) {
        const double v = grad0[b * (k + 1) + j];
        if (j == k) it.start_new_grad.push_back(v);
        else it.start_prev_grad_inf = std::max(it.start_prev_grad_inf, std::abs(v));
      }

    OptimizationResult res;
    try {
      res = minimize([&ev](std::span<const double> x, std::span<double> gr) { return ev.energy_and_gradient(x, gr); },
                     std::move(theta0), cfg.optimizer);
    } catch (const OptimizationError& e) {
      trace.stop_reason = fmt::format("optimizer aborted at iteration {}: {}", k + 1, e.what());
      throw AdaptAborted(trace.stop_reason, trace);
    }

    it.energy = res.energy;
    it.fci_error = res.energy - cfg.reference_energy;
    it.theta = res.theta_opt;
    it.vqe_iterations = res.n_iterations;
    it.vqe_converged = res.converged;

    trace.ansatz.op_indices = std::move(ops);
    trace.ansatz.theta = res.theta_opt;
    trace.iterations.push_back(std::move(it));
    state = ev.state(trace.ansatz.theta);
    if (on_iteration) on_iteration(trace);
  }
  return trace;
}

Ansatz shuffle_ansatz(const Ansatz& a, std::uint64_t seed, double init_theta) {
  if (a.repetition != 1) throw std::invalid_argument("shuffle_ansatz: only plain (N = 1) ansaetze can be shuffled");
  Ansatz out;
  out.repetition = 1;
  out.op_indices = a.op_indices;
  if (seed != 0) {
    SplitMix64 rng(seed);
    for (std::size_t i = out.op_indices.size(); i > 1; --i) {
      const std::size_t j = rng.bounded(i);
      std::swap(out.op_indices[i - 1], out.op_indices[j]);
    }
  }
  out.theta.assign(out.op_indices.size(), init_theta);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> detect_gradient_trough(std::span<const double> series) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  const std::size_t n = series.size();
  if (n < 3) return spans;
  // later[k] = max_{j > k} |g_j|
  std::vector<double> later(n, -1.0);
  for (std::size_t k = n - 1; k-- > 0;) later[k] = std::max(later[k + 1], std::abs(series[k + 1]));
  double earlier = -1.0;  // max_{j < k} |g_j|
  bool open = false;
  std::size_t start = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double g = std::abs(series[k]);
    const bool in = g < earlier && g < later[k];
    if (in && !open) {
      open = true;
      start = k;
    } else if (!in && open) {
      open = false;
      spans.emplace_back(start, k - 1);
    }
    earlier = std::max(earlier, g);
  }
  if (open) spans.emplace_back(start, n - 1);
  return spans;
}

std::vector<std::pair<std::size_t, std::size_t>> detect_gradient_trough(const AdaptTrace& trace) {
  std::vector<double> series;
  for (const auto& it : trace.iterations) series.push_back(it.max_pool_gradient);
  return detect_gradient_trough(series);
}

}  // namespace avqe
