// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "avqe/statesim.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "avqe/hamio.hpp"

namespace avqe {

namespace {

constexpr cplx kIPow[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

double re_dot(std::span<const cplx> a, std::span<const cplx> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
  return acc;
}

// v <- exp(theta tau) v, using t1, t2 as scratch.
void exp_inplace(const SparseAction& tau, double theta, std::span<cplx> v, std::span<cplx> t1, std::span<cplx> t2) {
  if (theta == 0.0) return;
  const double s = std::sin(theta);
  const double h = std::sin(0.5 * theta);
  const double c = 2.0 * h * h;  // 1 - cos(theta)
  tau.apply(v, t1);
  tau.apply(t1, t2);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += s * t1[i] + c * t2[i];
}

void check_dims(std::size_t a, std::size_t b, const char* where) {
  if (a != b) throw std::invalid_argument(fmt::format("{}: dimension mismatch ({} vs {})", where, a, b));
}

}  // namespace

// ---------------------------------------------------------------------------

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits) {
  if (n_qubits > 30) throw std::invalid_argument("StateVector: at most 30 qubits");
  amps_[0] = 1.0;
}

StateVector StateVector::basis_state(std::size_t n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) throw std::out_of_range("basis index outside register");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm() const { return std::sqrt(re_dot(amps_, amps_)); }

cplx inner(const StateVector& a, const StateVector& b) {
  check_dims(a.dim(), b.dim(), "inner");
  cplx acc{};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

void Ansatz::validate(std::size_t pool_size) const {
  if (repetition == 0) throw std::invalid_argument("Ansatz: repetition must be >= 1");
  if (theta.size() != n_params())
    throw std::invalid_argument(
        fmt::format("Ansatz: {} parameters for {} operators x {} repetitions", theta.size(), op_indices.size(), repetition));
  for (auto i : op_indices)
    if (i >= pool_size) throw std::out_of_range(fmt::format("Ansatz: pool index {} out of range ({})", i, pool_size));
}

std::vector<std::pair<std::size_t, std::size_t>> expand_sequence(std::span<const std::size_t> op_indices,
                                                                 std::size_t repetition) {
  std::vector<std::pair<std::size_t, std::size_t>> seq;
  const std::size_t k = op_indices.size();
  seq.reserve(k * repetition);
  for (std::size_t b = 0; b < repetition; ++b)
    for (std::size_t j = 0; j < k; ++j) seq.emplace_back(op_indices[j], b * k + j);
  return seq;
}

std::vector<double> extend_collated(std::span<const double> theta, std::size_t k, std::size_t repetition) {
  if (theta.size() != k * repetition) throw std::invalid_argument("extend_collated: parameter count mismatch");
  std::vector<double> out;
  out.reserve((k + 1) * repetition);
  for (std::size_t b = 0; b < repetition; ++b) {
    out.insert(out.end(), theta.begin() + static_cast<long>(b * k), theta.begin() + static_cast<long>((b + 1) * k));
    out.push_back(0.0);
  }
  return out;
}

Observable::Observable(PauliOperator op) : op_(std::move(op)), action_(op_) {}

StateVector hf_reference(std::size_t n_qubits, std::size_t n_electrons, int ms2) {
  std::uint64_t index = 0;
  for (auto p : hf_occupation(n_qubits, n_electrons, ms2)) index |= std::uint64_t{1} << p;
  return StateVector::basis_state(n_qubits, index);
}

StateVector apply_pauli_sum(const PauliOperator& op, const StateVector& s) {
  check_dims(op.n_qubits(), s.n_qubits(), "apply_pauli_sum");
  StateVector out(s.n_qubits());
  out[0] = 0.0;
  for (const auto& [p, c] : op.terms()) {
    const cplx phase = c * kIPow[p.y_count() % 4];
    for (std::uint64_t b = 0; b < s.dim(); ++b) {
      const double sign = (std::popcount(p.z & b) & 1) ? -1.0 : 1.0;
      out[b ^ p.x] += sign * phase * s[b];
    }
  }
  return out;
}

StateVector apply_generator_exp(const PoolOperator& p, double theta, const StateVector& s) {
  check_dims(p.generator.n_qubits(), s.n_qubits(), "apply_generator_exp");
  StateVector out = s;
  std::vector<cplx> t1(s.dim()), t2(s.dim());
  exp_inplace(*p.action, theta, out.amplitudes(), t1, t2);
  return out;
}

StateVector prepare_state(const Ansatz& a, const OperatorPool& pool, const StateVector& ref) {
  a.validate(pool.size());
  StateVector out = ref;
  std::vector<cplx> t1(ref.dim()), t2(ref.dim());
  for (const auto& [op, param] : expand_sequence(a.op_indices, a.repetition)) {
    check_dims(pool[op].generator.n_qubits(), ref.n_qubits(), "prepare_state");
    exp_inplace(*pool[op].action, a.theta[param], out.amplitudes(), t1, t2);
  }
  return out;
}

namespace {
double checked_energy(std::span<const cplx> s, std::span<const cplx> hs) {
  cplx e{};
  for (std::size_t i = 0; i < s.size(); ++i) e += std::conj(s[i]) * hs[i];
  if (std::abs(e.imag()) > 1e-10) throw std::runtime_error(fmt::format("energy: imaginary residual {}", e.imag()));
  return e.real();
}
}  // namespace

double energy(const Observable& h, const StateVector& s) {
  check_dims(h.n_qubits(), s.n_qubits(), "energy");
  std::vector<cplx> hs(s.dim());
  h.action().apply(s.amplitudes(), hs);
  return checked_energy(s.amplitudes(), hs);
}

double energy(const PauliOperator& h, const StateVector& s) {
  const StateVector hs = apply_pauli_sum(h, s);
  return checked_energy(s.amplitudes(), hs.amplitudes());
}

std::vector<double> pool_gradients(const Observable& h, const StateVector& s, const OperatorPool& pool) {
  check_dims(h.n_qubits(), s.n_qubits(), "pool_gradients");
  std::vector<cplx> hs(s.dim()), ts(s.dim());
  h.action().apply(s.amplitudes(), hs);
  std::vector<double> g;
  g.reserve(pool.size());
  for (const auto& p : pool) {
    check_dims(p.generator.n_qubits(), s.n_qubits(), "pool_gradients");
    p.action->apply(s.amplitudes(), ts);
    g.push_back(2.0 * re_dot(hs, ts));
  }
  return g;
}

std::vector<double> ansatz_gradient(const Observable& h, const Ansatz& a, const OperatorPool& pool,
                                    const StateVector& ref) {
  a.validate(pool.size());
  AnsatzEvaluator ev(h, pool, ref, a.op_indices, a.repetition);
  std::vector<double> g(ev.n_params());
  ev.energy_and_gradient(a.theta, g);
  return g;
}

// ---------------------------------------------------------------------------

AnsatzEvaluator::AnsatzEvaluator(const Observable& h, const OperatorPool& pool, const StateVector& ref,
                                 std::vector<std::size_t> op_indices, std::size_t repetition)
    : h_(h),
      pool_(pool),
      ref_(ref),
      sequence_(expand_sequence(op_indices, repetition)),
      psi_(ref.dim()),
      lambda_(ref.dim()),
      t1_(ref.dim()),
      t2_(ref.dim()) {
  check_dims(h.n_qubits(), ref.n_qubits(), "AnsatzEvaluator");
  if (repetition == 0) throw std::invalid_argument("AnsatzEvaluator: repetition must be >= 1");
  for (auto i : op_indices) {
    if (i >= pool.size()) throw std::out_of_range(fmt::format("AnsatzEvaluator: pool index {} out of range", i));
    check_dims(pool[i].generator.n_qubits(), ref.n_qubits(), "AnsatzEvaluator");
  }
}

void AnsatzEvaluator::forward(std::span<const double> theta) {
  if (theta.size() != sequence_.size()) throw std::invalid_argument("AnsatzEvaluator: wrong parameter count");
  std::copy(ref_.amplitudes().begin(), ref_.amplitudes().end(), psi_.begin());
  for (const auto& [op, param] : sequence_) exp_inplace(*pool_[op].action, theta[param], psi_, t1_, t2_);
}

double AnsatzEvaluator::energy(std::span<const double> theta) {
  forward(theta);
  h_.action().apply(psi_, lambda_);
  return checked_energy(psi_, lambda_);
}

double AnsatzEvaluator::energy_and_gradient(std::span<const double> theta, std::span<double> grad) {
  if (grad.size() != sequence_.size()) throw std::invalid_argument("AnsatzEvaluator: wrong gradient size");
  forward(theta);
  h_.action().apply(psi_, lambda_);
  const double e = checked_energy(psi_, lambda_);
  for (std::size_t t = sequence_.size(); t-- > 0;) {
    const auto& [op, param] = sequence_[t];
    const SparseAction& tau = *pool_[op].action;
    const double th = theta[param];
    tau.apply(psi_, t1_);
    grad[param] = 2.0 * re_dot(lambda_, t1_);
    if (t == 0) break;
    if (th != 0.0) {
      // undo step t on both vectors: exp(-theta tau)
      const double s = std::sin(th);
      const double hh = std::sin(0.5 * th);
      const double c = 2.0 * hh * hh;
      tau.apply(t1_, t2_);
      for (std::size_t i = 0; i < psi_.size(); ++i) psi_[i] += -s * t1_[i] + c * t2_[i];
      exp_inplace(tau, -th, lambda_, t1_, t2_);
    }
  }
  return e;
}

StateVector AnsatzEvaluator::state(std::span<const double> theta) {
  forward(theta);
  StateVector out = ref_;
  std::copy(psi_.begin(), psi_.end(), out.amplitudes().begin());
  return out;
}

}  // namespace avqe
