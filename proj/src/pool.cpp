// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "avqe/pool.hpp"

#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "avqe/oracle.hpp"

namespace avqe {

PoolOperator make_pool_operator(std::string label, FermionOperator def, std::size_t n_qubits) {
  PoolOperator op;
  op.label = std::move(label);
  op.generator = jordan_wigner(def, n_qubits);
  op.fermionic_def = std::move(def);
  op.action = std::make_shared<const SparseAction>(op.generator);
  return op;
}

OperatorPool build_uccsd_pool(std::size_t n_so, std::size_t n_electrons, int ms2) {
  if (n_electrons > n_so) throw std::invalid_argument("build_uccsd_pool: more electrons than spin orbitals");
  const std::vector<std::size_t> occ = hf_occupation(n_so, n_electrons, ms2);
  std::vector<bool> is_occ(n_so, false);
  for (auto i : occ) is_occ[i] = true;
  std::vector<std::size_t> virt;
  for (std::size_t p = 0; p < n_so; ++p)
    if (!is_occ[p]) virt.push_back(p);

  auto spin = [](std::size_t p) { return p % 2; };
  OperatorPool pool;

  for (auto i : occ)
    for (auto a : virt) {
      if (spin(i) != spin(a)) continue;
      FermionOperator t = creation(a) * annihilation(i);
      FermionOperator def = t - t.adjoint();
      PoolOperator op = make_pool_operator(fmt::format("{} -> {}", i, a), std::move(def), n_so);
      op.kind = ExcitationKind::single;
      op.occupied = {i};
      op.virtuals = {a};
      pool.push_back(std::move(op));
    }

  for (std::size_t x = 0; x < occ.size(); ++x)
    for (std::size_t y = x + 1; y < occ.size(); ++y)
      for (std::size_t u = 0; u < virt.size(); ++u)
        for (std::size_t v = u + 1; v < virt.size(); ++v) {
          const std::size_t i = occ[x], j = occ[y], a = virt[u], b = virt[v];
          // alpha count among (i,j) must equal that among (a,b)
          if ((spin(i) == 0) + (spin(j) == 0) != (spin(a) == 0) + (spin(b) == 0)) continue;
          FermionOperator t = creation(a) * creation(b) * annihilation(j) * annihilation(i);
          FermionOperator def = t - t.adjoint();
          PoolOperator op = make_pool_operator(fmt::format("{},{} -> {},{}", i, j, a, b), std::move(def), n_so);
          op.kind = ExcitationKind::double_;
          op.occupied = {i, j};
          op.virtuals = {a, b};
          pool.push_back(std::move(op));
        }
  return pool;
}

bool generator_cubes_to_minus_self(const PauliOperator& generator, double tol) {
  const Eigen::MatrixXcd t = dense_matrix(generator);
  const Eigen::MatrixXcd cube = t * t * t;
  return (cube + t).cwiseAbs().maxCoeff() <= tol;
}

bool generator_cubes_to_minus_self(const PoolOperator& p, double tol) {
  return generator_cubes_to_minus_self(p.generator, tol);
}

void write_pool_manifest(std::ostream& out, const OperatorPool& pool) {
  for (std::size_t k = 0; k < pool.size(); ++k)
    out << fmt::format("{}  {}  {}\n", k, pool[k].label, pool[k].generator.size());
}

}  // namespace avqe
