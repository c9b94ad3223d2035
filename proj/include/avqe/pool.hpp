// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file pool.hpp
 * @brief Particle-hole UCCSD operator pool (no spin flips, no spin adaptation).
 *
 * Singles:  a+_a a_i - a+_i a_a          (i occupied, a virtual, same spin)
 * Doubles:  a+_a a+_b a_j a_i - h.c.     (i<j occupied, a<b virtual, N_alpha kept)
 *
 * Ordering is singles (by i, then a) followed by doubles (by i, j, a, b).
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "avqe/fermion.hpp"
#include "avqe/sparse_action.hpp"

namespace avqe {

enum class ExcitationKind { single, double_ };

struct PoolOperator {
  std::string label;  // e.g. "0 -> 2" or "0,1 -> 4,5"
  ExcitationKind kind = ExcitationKind::single;
  std::vector<std::size_t> occupied;
  std::vector<std::size_t> virtuals;
  FermionOperator fermionic_def;
  PauliOperator generator;                     // anti-Hermitian JW image
  std::shared_ptr<const SparseAction> action;  // compiled generator
};

using OperatorPool = std::vector<PoolOperator>;

/// Wraps a fermionic anti-Hermitian generator into a pool member.
[[nodiscard]] PoolOperator make_pool_operator(std::string label, FermionOperator def, std::size_t n_qubits);

[[nodiscard]] OperatorPool build_uccsd_pool(std::size_t n_so, std::size_t n_electrons, int ms2);

/// Dense check that tau^3 == -tau (tol 1e-10), which licenses the closed-form exponential.
[[nodiscard]] bool generator_cubes_to_minus_self(const PauliOperator& generator, double tol = 1e-10);
[[nodiscard]] bool generator_cubes_to_minus_self(const PoolOperator& p, double tol = 1e-10);

/// "index  label  n_terms" per line.
void write_pool_manifest(std::ostream& out, const OperatorPool& pool);

}  // namespace avqe
