// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief Exact reference quantities that share no code path with the simulator:
 * Kronecker-product dense matrices, symmetry-sector FCI and the
 * infinitely separated dimer built by integral surgery.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "avqe/fermion.hpp"
#include "avqe/hamio.hpp"

namespace avqe {

inline constexpr std::size_t kDenseQubitLimit = 12;

/// Explicit 2^n x 2^n matrix, M = P_{n-1} (x) ... (x) P_0 summed over terms.
/// Throws std::length_error above max_qubits.
[[nodiscard]] Eigen::MatrixXcd dense_matrix(const PauliOperator& op, std::size_t max_qubits = kDenseQubitLimit);

/// Lowest eigenvalue of the full (all particle numbers) dense matrix.
[[nodiscard]] double dense_ground_energy(const PauliOperator& h, std::size_t max_qubits = 10);

struct FciSpectrum {
  std::vector<double> eigenvalues;  // ascending, within the (N_alpha, N_beta) sector
  double ground_energy = 0.0;
  double hf_energy = 0.0;
  std::vector<double> excited_below_hf;
  std::vector<std::uint64_t> basis;  // sector determinants (bit q = orbital q occupied)
  Eigen::MatrixXcd vectors;          // columns are eigenvectors over `basis`
};

/// Lowest k eigenpairs of H restricted to determinants with the HF (N_alpha, N_beta).
/// k larger than the sector dimension is truncated; k == 0 means the whole sector.
[[nodiscard]] FciSpectrum fci_spectrum(const PauliOperator& h, std::size_t n_electrons, int ms2, std::size_t k = 0);

/// |<v_i|psi>|^2 for each stored eigenvector; psi indexed over the full register.
[[nodiscard]] std::vector<double> spectrum_overlaps(const FciSpectrum& s, std::span<const cplx> amplitudes);

/// Orbital placement of the two monomer copies inside the dimer. Occupied
/// orbitals of A then B come first so the dimer aufbau determinant is HF_A * HF_B.
struct DimerLayout {
  std::vector<std::size_t> a_orbital;  // monomer spatial orbital -> dimer spatial orbital
  std::vector<std::size_t> b_orbital;
};

[[nodiscard]] DimerLayout dimer_layout(const MolecularHamiltonian& monomer);

/// Two non-interacting copies: block-diagonal h and g, doubled e_nuc and electrons.
/// Requires a closed-shell monomer (ms2 == 0).
[[nodiscard]] MolecularHamiltonian dimer_hamiltonian(const MolecularHamiltonian& monomer);

}  // namespace avqe
