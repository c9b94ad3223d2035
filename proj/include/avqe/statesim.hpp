// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file statesim.hpp
 * @brief Dense statevector simulation of pool-generator ansaetze.
 *
 * Generators satisfy tau^3 = -tau, so
 *   exp(theta tau) = 1 + sin(theta) tau + (1 - cos(theta)) tau^2
 * and every exponential costs two sparse products.
 *
 * Ansatz convention: op_indices[0] is the first operator added and is applied
 * first to the reference; later operators act on the left. With repetition N
 * the k core operators are replicated into N collated blocks, block 0 acting
 * first, and theta[b * k + j] is the angle of operator j in block b.
 */

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "avqe/fermion.hpp"
#include "avqe/pool.hpp"
#include "avqe/sparse_action.hpp"

namespace avqe {

class StateVector {
 public:
  StateVector() = default;
  /// |0...0>
  explicit StateVector(std::size_t n_qubits);
  [[nodiscard]] static StateVector basis_state(std::size_t n_qubits, std::uint64_t index);

  [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
  [[nodiscard]] std::size_t dim() const { return amps_.size(); }
  [[nodiscard]] std::span<const cplx> amplitudes() const { return amps_; }
  [[nodiscard]] std::span<cplx> amplitudes() { return amps_; }
  [[nodiscard]] const cplx& operator[](std::size_t i) const { return amps_[i]; }
  [[nodiscard]] cplx& operator[](std::size_t i) { return amps_[i]; }
  [[nodiscard]] double norm() const;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<cplx> amps_;
};

/// <a|b>
[[nodiscard]] cplx inner(const StateVector& a, const StateVector& b);

struct Ansatz {
  std::vector<std::size_t> op_indices;
  std::vector<double> theta;
  std::size_t repetition = 1;

  [[nodiscard]] std::size_t n_params() const { return op_indices.size() * repetition; }
  /// Throws if theta has the wrong length, repetition is 0 or an index is >= pool_size.
  void validate(std::size_t pool_size) const;
};

/// Application order of an ansatz as (pool index, parameter index) pairs.
[[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> expand_sequence(std::span<const std::size_t> op_indices,
                                                                               std::size_t repetition);

/// Grows a collated parameter vector from k to k+1 core operators, new angles zero.
[[nodiscard]] std::vector<double> extend_collated(std::span<const double> theta, std::size_t k, std::size_t repetition);

/// A Hamiltonian together with its compiled sparse form.
class Observable {
 public:
  Observable() = default;
  explicit Observable(PauliOperator op);
  [[nodiscard]] const PauliOperator& op() const { return op_; }
  [[nodiscard]] const SparseAction& action() const { return action_; }
  [[nodiscard]] std::size_t n_qubits() const { return op_.n_qubits(); }

 private:
  PauliOperator op_;
  SparseAction action_;
};

[[nodiscard]] StateVector hf_reference(std::size_t n_qubits, std::size_t n_electrons, int ms2);

/// op * s evaluated term by term from the Pauli strings.
[[nodiscard]] StateVector apply_pauli_sum(const PauliOperator& op, const StateVector& s);

[[nodiscard]] StateVector apply_generator_exp(const PoolOperator& p, double theta, const StateVector& s);

[[nodiscard]] StateVector prepare_state(const Ansatz& a, const OperatorPool& pool, const StateVector& ref);

/// Re <s|H|s>; throws if the imaginary residual exceeds 1e-10.
[[nodiscard]] double energy(const Observable& h, const StateVector& s);
[[nodiscard]] double energy(const PauliOperator& h, const StateVector& s);

/// g_i = <s|[H, A_i]|s> = 2 Re <Hs|A_i s> for every pool member (signed).
[[nodiscard]] std::vector<double> pool_gradients(const Observable& h, const StateVector& s, const OperatorPool& pool);

/// Exact dE/dtheta for every ansatz parameter (forward state + backward adjoint sweep).
[[nodiscard]] std::vector<double> ansatz_gradient(const Observable& h, const Ansatz& a, const OperatorPool& pool,
                                                  const StateVector& ref);

/// Reusable energy/gradient evaluator for a fixed operator sequence. Owns its
/// scratch buffers; use one instance per thread.
class AnsatzEvaluator {
 public:
  AnsatzEvaluator(const Observable& h, const OperatorPool& pool, const StateVector& ref,
                  std::vector<std::size_t> op_indices, std::size_t repetition = 1);

  [[nodiscard]] std::size_t n_params() const { return sequence_.size(); }
  [[nodiscard]] double energy(std::span<const double> theta);
  /// Returns E(theta) and writes dE/dtheta into grad (size n_params()).
  double energy_and_gradient(std::span<const double> theta, std::span<double> grad);
  [[nodiscard]] StateVector state(std::span<const double> theta);

 private:
  void forward(std::span<const double> theta);

  const Observable& h_;
  const OperatorPool& pool_;
  const StateVector& ref_;
  std::vector<std::pair<std::size_t, std::size_t>> sequence_;
  std::vector<cplx> psi_, lambda_, t1_, t2_;
};

}  // namespace avqe
