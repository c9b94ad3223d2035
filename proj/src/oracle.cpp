// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "avqe/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>
#include <fmt/format.h>
#include <unsupported/Eigen/KroneckerProduct>

namespace avqe {

namespace {

using SparseC = Eigen::SparseMatrix<cplx>;

SparseC pauli_matrix(char c) {
  const cplx I{0.0, 1.0};
  Eigen::Matrix2cd m;
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -I, I, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m.sparseView();
}

}  // namespace

Eigen::MatrixXcd dense_matrix(const PauliOperator& op, std::size_t max_qubits) {
  const std::size_t n = op.n_qubits();
  if (n > max_qubits)
    throw std::length_error(fmt::format("dense_matrix: {} qubits exceeds the limit of {}", n, max_qubits));
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [s, c] : op.terms()) {
    SparseC m(1, 1);
    m.insert(0, 0) = c;
    // Most significant factor first so that qubit 0 is the lowest index bit.
    for (std::size_t q = n; q-- > 0;) m = SparseC(Eigen::kroneckerProduct(m, pauli_matrix(s.at(q))));
    for (Eigen::Index k = 0; k < m.outerSize(); ++k)
      for (SparseC::InnerIterator it(m, k); it; ++it) out(it.row(), it.col()) += it.value();
  }
  return out;
}

double dense_ground_energy(const PauliOperator& h, std::size_t max_qubits) {
  const Eigen::MatrixXcd m = dense_matrix(h, max_qubits);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

FciSpectrum fci_spectrum(const PauliOperator& h, std::size_t n_electrons, int ms2, std::size_t k) {
  const std::size_t n = h.n_qubits();
  if (n > 16) throw std::length_error("fci_spectrum: at most 16 qubits");
  const long ne = static_cast<long>(n_electrons);
  if ((ne + ms2) % 2 != 0 || std::abs(ms2) > ne) throw std::invalid_argument("fci_spectrum: inconsistent ms2");
  const int n_alpha = static_cast<int>((ne + ms2) / 2);
  const int n_beta = static_cast<int>((ne - ms2) / 2);
  std::uint64_t alpha_mask = 0;
  for (std::size_t q = 0; q < n; q += 2) alpha_mask |= std::uint64_t{1} << q;

  FciSpectrum out;
  std::unordered_map<std::uint64_t, Eigen::Index> index;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    if (std::popcount(b & alpha_mask) == n_alpha && std::popcount(b & ~alpha_mask) == n_beta) {
      index[b] = static_cast<Eigen::Index>(out.basis.size());
      out.basis.push_back(b);
    }
  }
  if (out.basis.empty()) throw std::invalid_argument("fci_spectrum: empty symmetry sector");

  // <b ^ x| P |b> = i^{#Y} (-1)^{|z & b|}
  const Eigen::Index dim = static_cast<Eigen::Index>(out.basis.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (Eigen::Index col = 0; col < dim; ++col) {
    const std::uint64_t b = out.basis[static_cast<std::size_t>(col)];
    for (const auto& [s, c] : h.terms()) {
      const auto it = index.find(b ^ s.x);
      if (it == index.end()) continue;
      const cplx sign = (std::popcount(s.z & b) % 2) ? -1.0 : 1.0;
      m(it->second, col) += c * kIPow[s.y_count() % 4] * sign;
    }
  }

  std::uint64_t hf = 0;
  for (int a = 0; a < n_alpha; ++a) hf |= std::uint64_t{1} << (2 * a);
  for (int b = 0; b < n_beta; ++b) hf |= std::uint64_t{1} << (2 * b + 1);
  out.hf_energy = m(index.at(hf), index.at(hf)).real();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success) throw std::runtime_error("fci_spectrum: eigensolver failed");
  const Eigen::Index keep = (k == 0) ? dim : std::min<Eigen::Index>(dim, static_cast<Eigen::Index>(k));
  for (Eigen::Index i = 0; i < keep; ++i) out.eigenvalues.push_back(es.eigenvalues()(i));
  out.vectors = es.eigenvectors().leftCols(keep);
  out.ground_energy = out.eigenvalues.front();
  for (std::size_t i = 1; i < out.eigenvalues.size(); ++i)
    if (out.eigenvalues[i] < out.hf_energy) out.excited_below_hf.push_back(out.eigenvalues[i]);
  return out;
}

std::vector<double> spectrum_overlaps(const FciSpectrum& s, std::span<const cplx> amplitudes) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < s.vectors.cols(); ++i) {
    cplx acc{};
    for (std::size_t r = 0; r < s.basis.size(); ++r)
      acc += std::conj(s.vectors(static_cast<Eigen::Index>(r), i)) * amplitudes[s.basis[r]];
    out.push_back(std::norm(acc));
  }
  return out;
}

DimerLayout dimer_layout(const MolecularHamiltonian& monomer) {
  if (monomer.ms2 != 0 || monomer.n_electrons % 2 != 0)
    throw std::invalid_argument("dimer construction requires a closed-shell monomer");
  const std::size_t n = monomer.n_spatial;
  const std::size_t n_occ = monomer.n_electrons / 2;
  DimerLayout layout;
  for (std::size_t p = 0; p < n; ++p) {
    if (p < n_occ) {
      layout.a_orbital.push_back(p);
      layout.b_orbital.push_back(n_occ + p);
    } else {
      layout.a_orbital.push_back(2 * n_occ + (p - n_occ));
      layout.b_orbital.push_back(n + n_occ + (p - n_occ));
    }
  }
  return layout;
}

MolecularHamiltonian dimer_hamiltonian(const MolecularHamiltonian& monomer) {
  const DimerLayout layout = dimer_layout(monomer);
  const std::size_t n = monomer.n_spatial;
  MolecularHamiltonian d(2 * n, 2 * monomer.n_electrons, 0);
  d.e_nuc = 2.0 * monomer.e_nuc;
  for (const auto* map : {&layout.a_orbital, &layout.b_orbital}) {
    const auto& o = *map;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        d.one_body(o[p], o[q]) = monomer.one_body(p, q);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t s = 0; s < n; ++s) d.two_body(o[p], o[q], o[r], o[s]) = monomer.two_body(p, q, r, s);
      }
  }
  return d;
}

}  // namespace avqe
