// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fermion.hpp
 * @brief Second-quantized operators, Pauli-string algebra and the Jordan-Wigner map.
 *
 * Pauli strings are packed into (x, z) bit masks of up to 64 qubits:
 *   I = (0,0), X = (1,0), Y = (1,1), Z = (0,1)
 * and represent P = i^{|x & z|} X^x Z^z. Qubit q is spin orbital q, and
 * computational basis index bit q is the occupation of orbital q.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "avqe/hamio.hpp"

namespace avqe {

using cplx = std::complex<double>;

inline constexpr double kPauliDropTolerance = 1e-14;

struct LadderOp {
  std::size_t mode = 0;
  bool creation = false;
  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

/// coefficient * op[0] op[1] ... op[k-1]
struct FermionTerm {
  cplx coefficient{1.0, 0.0};
  std::vector<LadderOp> ops;
};

/// Sum of fermion terms. Equality is decided on normal-ordered forms.
class FermionOperator {
 public:
  FermionOperator() = default;
  explicit FermionOperator(FermionTerm t) { terms_.push_back(std::move(t)); }

  FermionOperator& operator+=(const FermionOperator& o);
  FermionOperator& operator-=(const FermionOperator& o);
  FermionOperator& operator*=(cplx c);
  friend FermionOperator operator+(FermionOperator a, const FermionOperator& b) { return a += b; }
  friend FermionOperator operator-(FermionOperator a, const FermionOperator& b) { return a -= b; }
  friend FermionOperator operator*(FermionOperator a, const FermionOperator& b);

  [[nodiscard]] FermionOperator adjoint() const;

  /// Creators left (descending mode), annihilators right (descending mode),
  /// like terms combined and terms below tol dropped.
  [[nodiscard]] FermionOperator normal_ordered(double tol = kPauliDropTolerance) const;

  [[nodiscard]] const std::vector<FermionTerm>& terms() const { return terms_; }
  [[nodiscard]] std::size_t max_mode() const;

  friend bool operator==(const FermionOperator& a, const FermionOperator& b);

 private:
  std::vector<FermionTerm> terms_;
};

[[nodiscard]] FermionOperator creation(std::size_t p);
[[nodiscard]] FermionOperator annihilation(std::size_t p);

struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  [[nodiscard]] bool is_identity() const { return x == 0 && z == 0; }
  /// Number of Y factors.
  [[nodiscard]] int y_count() const;
  /// Character for qubit q: 'I', 'X', 'Y' or 'Z'.
  [[nodiscard]] char at(std::size_t q) const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;
};

/// Product a*b = i^phase * c, with phase in {0,1,2,3}.
struct PauliProduct {
  PauliString string;
  int phase = 0;
};
[[nodiscard]] PauliProduct multiply(const PauliString& a, const PauliString& b);

/// Parses "IXYZ" with character k acting on qubit k.
[[nodiscard]] PauliString parse_pauli_string(std::string_view s);

/// Weighted sum of n-qubit Pauli strings kept in canonical (sorted) order.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n_qubits);

  [[nodiscard]] static PauliOperator identity(std::size_t n_qubits, cplx c = 1.0);
  [[nodiscard]] static PauliOperator from_string(std::size_t n_qubits, std::string_view s, cplx c = 1.0);

  [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] const std::map<PauliString, cplx>& terms() const { return terms_; }
  [[nodiscard]] cplx coefficient(const PauliString& s) const;

  void add_term(const PauliString& s, cplx c);

  PauliOperator& operator+=(const PauliOperator& o);
  PauliOperator& operator-=(const PauliOperator& o);
  PauliOperator& operator*=(cplx c);
  friend PauliOperator operator+(PauliOperator a, const PauliOperator& b) { return a += b; }
  friend PauliOperator operator-(PauliOperator a, const PauliOperator& b) { return a -= b; }
  friend PauliOperator operator*(PauliOperator a, cplx c) { return a *= c; }
  friend PauliOperator operator*(cplx c, PauliOperator a) { return a *= c; }
  friend PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);

  /// Drops terms with |c| <= tol.
  PauliOperator& simplify(double tol = kPauliDropTolerance);

  [[nodiscard]] PauliOperator adjoint() const;
  [[nodiscard]] bool is_hermitian(double tol = 1e-12) const;
  [[nodiscard]] bool is_anti_hermitian(double tol = 1e-12) const;

  /// One term per line: "coeff  PAULISTRING". Real coefficients print as a
  /// plain number, imaginary ones with an 'i' suffix, general ones as (re,im).
  void write_text(std::ostream& out) const;
  [[nodiscard]] std::string to_text() const;
  [[nodiscard]] static PauliOperator parse_text(std::size_t n_qubits, std::string_view text);

 private:
  std::size_t n_qubits_ = 0;
  std::map<PauliString, cplx> terms_;
};

/// ab - ba, simplified.
[[nodiscard]] PauliOperator commutator(const PauliOperator& a, const PauliOperator& b);

[[nodiscard]] PauliOperator jordan_wigner(const FermionTerm& t, std::size_t n_qubits);
[[nodiscard]] PauliOperator jordan_wigner(const FermionOperator& f, std::size_t n_qubits);

/// Qubit Hamiltonian including e_nuc on the identity string.
[[nodiscard]] PauliOperator hamiltonian_to_qubits(const SpinOrbitalHamiltonian& h);

/// JW images of total particle number and S_z = (N_alpha - N_beta)/2.
[[nodiscard]] PauliOperator number_operator(std::size_t n_qubits);
[[nodiscard]] PauliOperator sz_operator(std::size_t n_qubits);

}  // namespace avqe
