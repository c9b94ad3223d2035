// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "avqe/experiment.hpp"
#include "avqe/fermion.hpp"
#include "avqe/hamio.hpp"
#include "avqe/statesim.hpp"

namespace avqe::testing {

inline std::string fixture(const std::string& name) { return std::string(AVQE_TEST_FIXTURE_DIR) + "/" + name + ".fcidump"; }

/// Problems are expensive to build; tests share one instance per fixture.
inline const Problem& problem(const std::string& name) {
  static std::map<std::string, Problem> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_problem(fixture(name), name)).first;
  return it->second;
}

/// a_p on the 2^n Fock space, built straight from occupation bits:
/// a_p|b> = (-1)^{#occupied modes below p} |b without p>.
inline Eigen::MatrixXcd annihilator_matrix(std::size_t p, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t b = 0; b < dim; ++b) {
    if (!((b >> p) & 1)) continue;
    const int parity = std::popcount(b & ((std::size_t{1} << p) - 1)) & 1;
    m(b ^ (std::size_t{1} << p), b) = parity ? -1.0 : 1.0;
  }
  return m;
}

inline Eigen::MatrixXcd fermion_matrix(const FermionOperator& f, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : f.terms()) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim) * t.coefficient;
    for (const auto& op : t.ops) {
      const Eigen::MatrixXcd a = annihilator_matrix(op.mode, n);
      m = m * (op.creation ? Eigen::MatrixXcd(a.adjoint()) : a);
    }
    out += m;
  }
  return out;
}

inline Eigen::VectorXcd to_eigen(const StateVector& s) {
  Eigen::VectorXcd v(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) v[i] = s[i];
  return v;
}

inline StateVector from_eigen(const Eigen::VectorXcd& v, std::size_t n_qubits) {
  StateVector s(n_qubits);
  for (std::size_t i = 0; i < s.dim(); ++i) s[i] = v[i];
  return s;
}

inline StateVector random_state(std::size_t n_qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Eigen::VectorXcd v(std::size_t{1} << n_qubits);
  for (auto& a : v) a = {nd(rng), nd(rng)};
  v.normalize();
  return from_eigen(v, n_qubits);
}

inline std::vector<double> random_angles_mt(std::size_t n, std::uint64_t seed, double lo = 0.0,
                                            double hi = 2.0 * 3.141592653589793) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ud(lo, hi);
  std::vector<double> t(n);
  for (auto& x : t) x = ud(rng);
  return t;
}

inline double max_abs_diff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Central difference of f along every coordinate.
inline std::vector<double> central_difference(const std::function<double(const std::vector<double>&)>& f,
                                              std::vector<double> x, double h) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double x0 = x[i];
    x[i] = x0 + h;
    const double fp = f(x);
    x[i] = x0 - h;
    const double fm = f(x);
    x[i] = x0;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

}  // namespace avqe::testing
