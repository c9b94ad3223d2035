// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hamio.hpp
 * @brief FCIDUMP reading/writing and spatial -> spin-orbital integral expansion.
 *
 * Two-electron integrals are stored in chemists' notation (pq|rs).
 * Spin orbitals are interleaved: 2p is alpha, 2p+1 is beta.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace avqe {

/// Spatial-orbital molecular Hamiltonian (real orbitals).
struct MolecularHamiltonian {
  std::size_t n_spatial = 0;
  std::size_t n_electrons = 0;
  int ms2 = 0;
  double e_nuc = 0.0;
  std::vector<double> h;  // n^2, row-major
  std::vector<double> g;  // n^4, (pq|rs) at ((p*n+q)*n+r)*n+s

  MolecularHamiltonian() = default;
  MolecularHamiltonian(std::size_t n_orb, std::size_t n_elec, int two_ms);

  [[nodiscard]] double one_body(std::size_t p, std::size_t q) const { return h[p * n_spatial + q]; }
  [[nodiscard]] double& one_body(std::size_t p, std::size_t q) { return h[p * n_spatial + q]; }

  [[nodiscard]] double two_body(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return g[((p * n_spatial + q) * n_spatial + r) * n_spatial + s];
  }
  [[nodiscard]] double& two_body(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return g[((p * n_spatial + q) * n_spatial + r) * n_spatial + s];
  }

  /// Writes (pq|rs) into all eight real-orbital symmetric slots.
  void set_two_body_symmetric(std::size_t p, std::size_t q, std::size_t r, std::size_t s, double v);

  /// Number of alpha / beta electrons implied by n_electrons and ms2.
  [[nodiscard]] std::size_t n_alpha() const;
  [[nodiscard]] std::size_t n_beta() const;

  /// Throws std::invalid_argument if any invariant is violated beyond tol.
  void validate(double tol = 1e-12) const;
};

/// Spin-orbital Hamiltonian with antisymmetrized two-body tensor
/// g_PQRS = <PQ||RS> = <PQ|RS> - <PQ|SR>, so that
/// H = e_nuc + sum h_PQ a+_P a_Q + 1/4 sum g_PQRS a+_P a+_Q a_S a_R.
struct SpinOrbitalHamiltonian {
  std::size_t n_so = 0;
  double e_nuc = 0.0;
  std::vector<double> h;  // n_so^2
  std::vector<double> g;  // n_so^4

  [[nodiscard]] double one_body(std::size_t p, std::size_t q) const { return h[p * n_so + q]; }
  [[nodiscard]] double two_body(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return g[((p * n_so + q) * n_so + r) * n_so + s];
  }
};

/// Raised for malformed FCIDUMP input; what() names the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& msg);
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

[[nodiscard]] MolecularHamiltonian parse_fcidump(std::istream& in);
[[nodiscard]] MolecularHamiltonian parse_fcidump(std::string_view text);
[[nodiscard]] MolecularHamiltonian load_fcidump(const std::string& path);

/// Writes the symmetry-unique integrals with 17 significant digits.
void write_fcidump(std::ostream& out, const MolecularHamiltonian& m);

[[nodiscard]] SpinOrbitalHamiltonian to_spin_orbitals(const MolecularHamiltonian& m);

/// Energy of the determinant with the given spin orbitals occupied, evaluated
/// with Slater-Condon rules over spatial integrals.
[[nodiscard]] double determinant_energy(const MolecularHamiltonian& m,
                                        const std::vector<std::size_t>& occupied_spin_orbitals);

/// Same energy evaluated with the spin-orbital tensors.
[[nodiscard]] double determinant_energy(const SpinOrbitalHamiltonian& so,
                                        const std::vector<std::size_t>& occupied_spin_orbitals);

/// Spin orbitals of the aufbau determinant: lowest n_alpha even, lowest n_beta odd.
[[nodiscard]] std::vector<std::size_t> hf_occupation(std::size_t n_so, std::size_t n_electrons, int ms2);

}  // namespace avqe
