// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "avqe/oracle.hpp"
#include "support.hpp"

namespace avqe {
namespace {

using testing::fermion_matrix;

const cplx I{0.0, 1.0};

PauliOperator P(std::size_t n, const char* s, cplx c = 1.0) { return PauliOperator::from_string(n, s, c); }

PauliOperator random_pauli_operator(std::size_t n, std::size_t terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ud(-1.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 3);
  PauliOperator op(n);
  for (std::size_t t = 0; t < terms; ++t) {
    std::string s;
    for (std::size_t q = 0; q < n; ++q) s += "IXYZ"[pick(rng)];
    op.add_term(parse_pauli_string(s), {ud(rng), ud(rng)});
  }
  return op;
}

TEST(JordanWigner, CreationOnOneQubit) {
  const PauliOperator a = jordan_wigner(creation(0), 1);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_NEAR(std::abs(a.coefficient(parse_pauli_string("X")) - cplx(0.5, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(a.coefficient(parse_pauli_string("Y")) - cplx(0.0, -0.5)), 0.0, 1e-15);
}

TEST(JordanWigner, NumberOperator) {
  const PauliOperator n = jordan_wigner(creation(0) * annihilation(0), 1);
  EXPECT_EQ(n.size(), 2u);
  EXPECT_NEAR(n.coefficient(parse_pauli_string("I")).real(), 0.5, 1e-15);
  EXPECT_NEAR(n.coefficient(parse_pauli_string("Z")).real(), -0.5, 1e-15);
}

TEST(JordanWigner, SingleExcitationMatchesFockSpaceMatrix) {
  const FermionOperator f = creation(2) * annihilation(0) - creation(0) * annihilation(2);
  const PauliOperator q = jordan_wigner(f, 4);
  EXPECT_TRUE(q.is_anti_hermitian());
  EXPECT_LT((dense_matrix(q) - fermion_matrix(f, 4)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(JordanWigner, RandomProductsMatchFockSpaceMatrix) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> mode(0, 4);
  std::bernoulli_distribution dag(0.5);
  for (int trial = 0; trial < 20; ++trial) {
    FermionTerm t;
    t.coefficient = {0.3, -0.7};
    for (int k = 0; k < 4; ++k) t.ops.push_back({mode(rng), dag(rng)});
    const FermionOperator f(t);
    EXPECT_LT((dense_matrix(jordan_wigner(f, 5)) - fermion_matrix(f, 5)).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(JordanWigner, CanonicalAnticommutation) {
  const std::size_t n = 4;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(16, 16);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Eigen::MatrixXcd a = dense_matrix(jordan_wigner(annihilation(p), n));
      const Eigen::MatrixXcd ad = dense_matrix(jordan_wigner(creation(q), n));
      const Eigen::MatrixXcd b = dense_matrix(jordan_wigner(annihilation(q), n));
      EXPECT_LT((a * ad + ad * a - (p == q ? id : Eigen::MatrixXcd::Zero(16, 16))).cwiseAbs().maxCoeff(), 1e-14);
      EXPECT_LT((a * b + b * a).cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(JordanWigner, RangeError) { EXPECT_THROW((void)jordan_wigner(creation(4), 4), std::out_of_range); }

TEST(FermionAlgebra, NormalOrderingDecidesEquality) {
  // a_0 a+_0 = 1 - a+_0 a_0
  const FermionOperator lhs = annihilation(0) * creation(0);
  FermionOperator one{FermionTerm{1.0, {}}};
  EXPECT_TRUE(lhs == one - creation(0) * annihilation(0));
  EXPECT_TRUE(creation(1) * creation(0) == FermionOperator(FermionTerm{-1.0, {{0, true}, {1, true}}}));
  EXPECT_TRUE((creation(0) * creation(0)).normal_ordered().terms().empty());
}

TEST(PauliAlgebra, ProductPhasesMatchDense) {
  const char* s = "IXYZ";
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const PauliProduct pr = multiply(parse_pauli_string(std::string(1, s[a])), parse_pauli_string(std::string(1, s[b])));
      PauliOperator c(1);
      c.add_term(pr.string, std::pow(I, pr.phase));
      EXPECT_LT((dense_matrix(P(1, std::string(1, s[a]).c_str())) * dense_matrix(P(1, std::string(1, s[b]).c_str())) -
                 dense_matrix(c))
                    .cwiseAbs()
                    .maxCoeff(),
                1e-15);
    }
}

TEST(PauliAlgebra, RandomOperatorProductMatchesDense) {
  const PauliOperator a = random_pauli_operator(4, 12, 1);
  const PauliOperator b = random_pauli_operator(4, 9, 2);
  EXPECT_LT((dense_matrix(a * b) - dense_matrix(a) * dense_matrix(b)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Commutator, XY) {
  const PauliOperator c = commutator(P(1, "X"), P(1, "Y"));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_NEAR(std::abs(c.coefficient(parse_pauli_string("Z")) - 2.0 * I), 0.0, 1e-15);
}

TEST(Commutator, SelfCommutationVanishes) {
  const PauliOperator& h = testing::problem("h4_1a").hamiltonian.op();
  EXPECT_TRUE(commutator(h, h).empty());
}

TEST(Commutator, HamiltonianWithGeneratorMatchesDense) {
  const auto& p = testing::problem("h4_1a");
  const PauliOperator& h = p.hamiltonian.op();
  const Eigen::MatrixXcd hd = dense_matrix(h);
  for (std::size_t i : {0u, 7u, 13u, 25u}) {
    const Eigen::MatrixXcd ad = dense_matrix(p.pool[i].generator);
    EXPECT_LT((dense_matrix(commutator(h, p.pool[i].generator)) - (hd * ad - ad * hd)).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Commutator, QubitMismatchThrows) {
  EXPECT_THROW((void)commutator(P(1, "X"), P(2, "XX")), std::invalid_argument);
}

TEST(QubitHamiltonian, NuclearRepulsionOnly) {
  MolecularHamiltonian m(2, 2, 0);
  m.e_nuc = 1.3;
  const PauliOperator h = hamiltonian_to_qubits(to_spin_orbitals(m));
  ASSERT_EQ(h.size(), 1u);
  EXPECT_DOUBLE_EQ(h.coefficient(PauliString{}).real(), 1.3);
}

TEST(QubitHamiltonian, H2GroundStateIsFci) {
  const auto& p = testing::problem("h2");
  EXPECT_TRUE(p.hamiltonian.op().is_hermitian());
  EXPECT_NEAR(dense_ground_energy(p.hamiltonian.op()), -1.1371170673457316, 1e-9);
}

TEST(QubitHamiltonian, H4HfExpectationIsRhfEnergy) {
  const auto& p = testing::problem("h4_1a");
  EXPECT_NEAR(energy(p.hamiltonian.op(), hf_reference(8, 4, 0)), -2.0985459369980344, 1e-8);
}

TEST(QubitHamiltonian, MatchesSecondQuantizedHamiltonian) {
  // Build H from the spin-orbital tensors with explicit ladder products.
  const MolecularHamiltonian m = load_fcidump(testing::fixture("h2"));
  const SpinOrbitalHamiltonian so = to_spin_orbitals(m);
  FermionOperator f{FermionTerm{so.e_nuc, {}}};
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = 0; q < 4; ++q)
      if (so.one_body(p, q) != 0.0) f += FermionOperator(FermionTerm{so.one_body(p, q), {{p, true}, {q, false}}});
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = 0; q < 4; ++q)
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 4; ++s)
          if (so.two_body(p, q, r, s) != 0.0)
            f += FermionOperator(
                FermionTerm{0.25 * so.two_body(p, q, r, s), {{p, true}, {q, true}, {s, false}, {r, false}}});
  EXPECT_LT((dense_matrix(hamiltonian_to_qubits(so)) - fermion_matrix(f, 4)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(QubitHamiltonian, ConservesParticleNumberAndSpin) {
  for (const char* name : {"h4_3a", "h6_1a"}) {
    const PauliOperator& h = testing::problem(name).hamiltonian.op();
    const std::size_t n = h.n_qubits();
    const Eigen::MatrixXcd hd = dense_matrix(h);
    for (const PauliOperator& s : {number_operator(n), sz_operator(n)}) {
      const Eigen::MatrixXcd sd = dense_matrix(s);
      ASSERT_LT((sd - Eigen::MatrixXcd(sd.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 1e-14);
      // [H, D]_ij = H_ij (d_j - d_i) for diagonal D.
      double worst = 0.0;
      for (Eigen::Index i = 0; i < hd.rows(); ++i)
        for (Eigen::Index j = 0; j < hd.cols(); ++j)
          worst = std::max(worst, std::abs(hd(i, j) * (sd(j, j) - sd(i, i))));
      EXPECT_LT(worst, 1e-10) << name;
    }
  }
}

TEST(PauliText, RoundTrip) {
  PauliOperator op(4);
  op.add_term(parse_pauli_string("IXYZ"), 0.5);
  op.add_term(parse_pauli_string("ZZII"), {0.0, -0.25});
  op.add_term(parse_pauli_string("XXXX"), {0.125, 0.375});
  const std::string text = op.to_text();
  EXPECT_NE(text.find("IXYZ"), std::string::npos);
  const PauliOperator back = PauliOperator::parse_text(4, text);
  EXPECT_LT((dense_matrix(back) - dense_matrix(op)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PauliText, CharacterKActsOnQubitK) {
  // X on qubit 0 flips the least significant bit.
  const Eigen::MatrixXcd m = dense_matrix(P(2, "XI"));
  EXPECT_EQ(m(1, 0), cplx(1.0));
  EXPECT_EQ(m(2, 0), cplx(0.0));
}

TEST(PauliOperator, SimplifyDropsSmallTerms) {
  PauliOperator op(2);
  op.add_term(parse_pauli_string("XX"), 1e-15);
  op.add_term(parse_pauli_string("ZZ"), 1.0);
  op.simplify();
  EXPECT_EQ(op.size(), 1u);
  PauliOperator z = P(1, "Z") - P(1, "Z");
  EXPECT_TRUE(z.empty());
}

}  // namespace
}  // namespace avqe
