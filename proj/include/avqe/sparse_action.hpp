// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "avqe/fermion.hpp"

namespace avqe {

/// CSR matrix of a PauliOperator in the computational basis. Built once from
/// the Pauli terms; entries below 1e-15 in magnitude are dropped.
class SparseAction {
 public:
  SparseAction() = default;
  explicit SparseAction(const PauliOperator& op);

  [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
  [[nodiscard]] std::size_t dim() const { return row_ptr_.empty() ? 0 : row_ptr_.size() - 1; }
  [[nodiscard]] std::size_t nnz() const { return vals_.size(); }

  /// out = M * in. out must not alias in.
  void apply(std::span<const cplx> in, std::span<cplx> out) const;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::uint32_t> cols_;
  std::vector<cplx> vals_;
};

}  // namespace avqe
