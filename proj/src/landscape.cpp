// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "avqe/landscape.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "avqe/random.hpp"

namespace avqe {

namespace {

std::size_t resolve_threads(std::size_t requested, std::size_t tasks) {
  std::size_t t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(t, tasks));
}

// Runs body(i) for i in [0, n) on up to `threads` workers. The first exception
// is rethrown after all workers have joined.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = resolve_threads(threads, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n && !failed.load();) {
      try {
        body(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

void optimize_record(const Observable& h, const OperatorPool& pool, const StateVector& ref,
                     const std::vector<std::size_t>& ops, std::size_t repetition, const ScanOptions& opt,
                     RestartRecord& rec) {
  AnsatzEvaluator ev(h, pool, ref, ops, repetition);
  rec.init_energy = ev.energy(rec.theta_init);
  try {
    const OptimizationResult r = minimize(
        [&ev](std::span<const double> x, std::span<double> g) { return ev.energy_and_gradient(x, g); },
        rec.theta_init, opt.optimizer);
    rec.energy_opt = r.energy;
    rec.fci_error = r.energy - opt.reference_energy;
    rec.converged = r.converged;
    rec.n_iterations = r.n_iterations;
    if (!r.converged) rec.error = r.message;
  } catch (const OptimizationError& e) {
    rec.error = e.what();
  }
}

}  // namespace

std::string_view to_string(InitKind k) {
  switch (k) {
    case InitKind::recycled: return "recycled";
    case InitKind::zero: return "zero";
    case InitKind::random: return "random";
  }
  return "unknown";
}

std::uint64_t restart_seed(std::uint64_t master, std::size_t length, std::size_t idx) {
  return derive_seed({master, length, idx});
}

std::vector<double> random_angles(std::uint64_t seed, std::size_t n) {
  SplitMix64 rng(seed);
  std::vector<double> theta(n);
  for (double& t : theta) t = 2.0 * std::numbers::pi * rng.uniform();
  return theta;
}

std::vector<RestartRecord> scan_ansatz(const Observable& h, const OperatorPool& pool, const StateVector& ref,
                                       const ScanSpec& spec, const ScanOptions& opt) {
  if (spec.repetition < 1) throw std::invalid_argument("scan_ansatz: repetition must be >= 1");
  std::size_t max_len = 0;
  for (std::size_t L : spec.lengths) {
    if (L == 0 || L > spec.op_indices.size())
      throw std::invalid_argument("scan_ansatz: ansatz length out of range");
    max_len = std::max(max_len, L);
  }
  for (std::size_t op : spec.op_indices)
    if (op >= pool.size()) throw std::out_of_range("scan_ansatz: operator index outside pool");
  const std::size_t n_rep = spec.repetition;

  // optimum[L] for L = 0..max_len, used to build each recycled start.
  std::vector<std::vector<double>> optimum(max_len + 1);
  if (!spec.optimized_thetas.empty()) {
    if (spec.optimized_thetas.size() + 1 < max_len)
      throw std::invalid_argument("scan_ansatz: optimized_thetas shorter than the longest length - 1");
    for (std::size_t L = 1; L < max_len; ++L) {
      if (spec.optimized_thetas[L - 1].size() != L * n_rep)
        throw std::invalid_argument("scan_ansatz: optimized theta has the wrong length");
      optimum[L] = spec.optimized_thetas[L - 1];
    }
  } else {
    // Sequential recycled chain: each length starts from the previous optimum.
    for (std::size_t L = 1; L < max_len; ++L) {
      RestartRecord rec;
      rec.theta_init = extend_collated(optimum[L - 1], L - 1, n_rep);
      std::vector<std::size_t> ops(spec.op_indices.begin(), spec.op_indices.begin() + L);
      AnsatzEvaluator ev(h, pool, ref, ops, n_rep);
      const OptimizationResult r = minimize(
          [&ev](std::span<const double> x, std::span<double> g) { return ev.energy_and_gradient(x, g); },
          rec.theta_init, opt.optimizer);
      optimum[L] = r.theta_opt;
    }
  }

  const std::size_t per_length = opt.n_random + 2;
  std::vector<RestartRecord> records(spec.lengths.size() * per_length);
  for (std::size_t li = 0; li < spec.lengths.size(); ++li) {
    const std::size_t L = spec.lengths[li];
    for (std::size_t j = 0; j < per_length; ++j) {
      RestartRecord& rec = records[li * per_length + j];
      rec.ansatz_length = L;
      if (j == 0) {
        rec.init_kind = InitKind::recycled;
        rec.theta_init = extend_collated(optimum[L - 1], L - 1, n_rep);
      } else if (j == 1) {
        rec.init_kind = InitKind::zero;
        rec.theta_init.assign(L * n_rep, 0.0);
      } else {
        rec.init_kind = InitKind::random;
        rec.seed = restart_seed(opt.master_seed, L, j - 2);
        rec.theta_init = random_angles(rec.seed, L * n_rep);
      }
    }
  }

  parallel_for(records.size(), opt.threads, [&](std::size_t i) {
    RestartRecord& rec = records[i];
    std::vector<std::size_t> ops(spec.op_indices.begin(), spec.op_indices.begin() + rec.ansatz_length);
    optimize_record(h, pool, ref, ops, n_rep, opt, rec);
  });
  return records;
}

std::vector<RestartRecord> scan_ansatz(const Observable& h, const OperatorPool& pool, const StateVector& ref,
                                       const AdaptTrace& trace, std::vector<std::size_t> lengths,
                                       const ScanOptions& opt) {
  ScanSpec spec;
  spec.op_indices = trace.ansatz.op_indices;
  spec.repetition = trace.ansatz.repetition;
  spec.lengths = std::move(lengths);
  for (const auto& it : trace.iterations) spec.optimized_thetas.push_back(it.theta);
  return scan_ansatz(h, pool, ref, spec, opt);
}

std::vector<TrapCluster> cluster_energies(std::vector<double> energies, double tol) {
  std::erase_if(energies, [](double e) { return !std::isfinite(e); });
  std::sort(energies.begin(), energies.end());
  std::vector<TrapCluster> out;
  for (std::size_t i = 0; i < energies.size();) {
    std::size_t j = i;
    while (j < energies.size() && energies[j] - energies[i] <= tol) ++j;
    out.push_back({energies[i], j - i, energies[j - 1] - energies[i]});
    i = j;
  }
  return out;
}

std::vector<TrapCluster> cluster_traps(std::span<const RestartRecord> records, double tol) {
  std::vector<double> energies;
  for (const auto& r : records)
    if (r.converged) energies.push_back(r.energy_opt);
  return cluster_energies(std::move(energies), tol);
}

double median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  if (v.size() % 2) return v[mid];
  const double hi = v[mid];
  return 0.5 * (hi + *std::max_element(v.begin(), v.begin() + mid));
}

VarianceScan variance_scan(const Observable& h, const OperatorPool& pool, const StateVector& ref,
                           const Ansatz& ansatz, std::span<const double> widths, std::size_t samples_per_width,
                           std::uint64_t master_seed, std::size_t threads) {
  ansatz.validate(pool.size());
  if (samples_per_width == 0) throw std::invalid_argument("variance_scan: samples_per_width must be positive");
  const std::size_t d = ansatz.n_params();

  VarianceScan out;
  out.widths.assign(widths.begin(), widths.end());
  out.samples_per_width = samples_per_width;
  out.center = ansatz.theta;

  // grads[(w * samples + s) * d + p]
  std::vector<double> grads(widths.size() * samples_per_width * d);
  parallel_for(widths.size() * samples_per_width, threads, [&](std::size_t task) {
    const std::size_t wi = task / samples_per_width;
    const std::size_t s = task % samples_per_width;
    const double w = widths[wi];
    SplitMix64 rng(derive_seed({master_seed, wi, s}));
    std::vector<double> theta(d);
    for (std::size_t p = 0; p < d; ++p) theta[p] = ansatz.theta[p] + w * (2.0 * rng.uniform() - 1.0);
    AnsatzEvaluator ev(h, pool, ref, ansatz.op_indices, ansatz.repetition);
    ev.energy_and_gradient(theta, std::span<double>(grads.data() + task * d, d));
  });

  for (std::size_t wi = 0; wi < widths.size(); ++wi) {
    const std::span<const double> g(grads.data() + wi * samples_per_width * d, samples_per_width * d);
    const std::size_t n = g.size();
    double mean = 0.0;
    for (double v : g) mean += v;
    mean /= static_cast<double>(std::max<std::size_t>(n, 1));
    double ss = 0.0;
    for (double v : g) ss += (v - mean) * (v - mean);
    out.variances.push_back(n > 1 ? ss / static_cast<double>(n - 1) : 0.0);
  }
  return out;
}

}  // namespace avqe
