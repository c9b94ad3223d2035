// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "avqe/sparse_action.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace avqe {

namespace {
constexpr cplx kIPow[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
constexpr double kEntryDrop = 1e-15;

struct ZTerm {
  std::uint64_t z;
  cplx c;  // coefficient times i^{#Y}
};
}  // namespace

SparseAction::SparseAction(const PauliOperator& op) : n_qubits_(op.n_qubits()) {
  if (n_qubits_ > 30) throw std::invalid_argument("SparseAction supports at most 30 qubits");
  const std::size_t dim = std::size_t{1} << n_qubits_;

  // P|b> = i^{#Y} (-1)^{|z & b|} |b ^ x>; group terms sharing the flip mask x.
  std::map<std::uint64_t, std::vector<ZTerm>> by_mask;
  for (const auto& [s, c] : op.terms()) by_mask[s.x].push_back({s.z, c * kIPow[s.y_count() % 4]});

  row_ptr_.assign(dim + 1, 0);
  for (std::size_t row = 0; row < dim; ++row) {
    for (const auto& [x, terms] : by_mask) {
      const std::uint64_t col = row ^ x;
      cplx v{};
      for (const auto& t : terms) v += (std::popcount(t.z & col) & 1) ? -t.c : t.c;
      if (std::abs(v) <= kEntryDrop) continue;
      cols_.push_back(static_cast<std::uint32_t>(col));
      vals_.push_back(v);
    }
    row_ptr_[row + 1] = vals_.size();
  }
}

void SparseAction::apply(std::span<const cplx> in, std::span<cplx> out) const {
  const std::size_t n = dim();
  if (in.size() != n || out.size() != n) throw std::invalid_argument("SparseAction::apply: dimension mismatch");
  for (std::size_t r = 0; r < n; ++r) {
    cplx acc{};
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) acc += vals_[k] * in[cols_[k]];
    out[r] = acc;
  }
}

}  // namespace avqe
