// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstring>
#include <numbers>
#include <random>

#include "avqe/landscape.hpp"
#include "support.hpp"

namespace avqe {
namespace {

const AdaptTrace& h4_trace() {
  static const AdaptTrace t = [] {
    const auto& p = testing::problem("h4_1a");
    AdaptConfig cfg;
    cfg.reference_energy = p.fci_energy;
    return run_adapt(p.hamiltonian, p.pool, p.reference, cfg);
  }();
  return t;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

void expect_identical(const std::vector<RestartRecord>& a, const std::vector<RestartRecord>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].ansatz_length, b[i].ansatz_length);
    EXPECT_EQ(a[i].init_kind, b[i].init_kind);
    EXPECT_EQ(a[i].seed, b[i].seed);
    EXPECT_TRUE(same_bits(a[i].energy_opt, b[i].energy_opt)) << i;
    EXPECT_EQ(a[i].converged, b[i].converged);
  }
}

TEST(Scan, H2SingleParameterHasOneMinimum) {
  const auto& p = testing::problem("h2");
  AdaptConfig cfg;
  const AdaptTrace t = run_adapt(p.hamiltonian, p.pool, p.reference, cfg);
  ScanOptions opt;
  opt.n_random = 20;
  opt.reference_energy = p.fci_energy;
  const auto records = scan_ansatz(p.hamiltonian, p.pool, p.reference, t, {1}, opt);
  ASSERT_EQ(records.size(), 22u);
  for (const auto& r : records) {
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.energy_opt, records[0].energy_opt, 1e-8);
  }
  // H2 needs only the double excitation to reach FCI.
  EXPECT_NEAR(records[0].energy_opt, p.fci_energy, 1e-8);
}

TEST(Scan, RecordLayoutAndSeeds) {
  const auto& p = testing::problem("h4_1a");
  ScanOptions opt;
  opt.n_random = 3;
  opt.master_seed = 17;
  const auto records = scan_ansatz(p.hamiltonian, p.pool, p.reference, h4_trace(), {2, 4}, opt);
  ASSERT_EQ(records.size(), 10u);
  const InitKind kinds[] = {InitKind::recycled, InitKind::zero, InitKind::random, InitKind::random, InitKind::random};
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(records[i].ansatz_length, i < 5 ? 2u : 4u);
    EXPECT_EQ(records[i].init_kind, kinds[i % 5]);
    if (i % 5 >= 2) {
      EXPECT_EQ(records[i].seed, restart_seed(17, records[i].ansatz_length, i % 5 - 2));
      for (double t : records[i].theta_init) {
        EXPECT_GE(t, 0.0);
        EXPECT_LT(t, 2.0 * std::numbers::pi);
      }
    }
  }
  EXPECT_EQ(records[1].theta_init, std::vector<double>(2, 0.0));
}

TEST(Scan, NoRandomRestarts) {
  const auto& p = testing::problem("h4_1a");
  ScanOptions opt;
  opt.n_random = 0;
  const auto records = scan_ansatz(p.hamiltonian, p.pool, p.reference, h4_trace(), {3}, opt);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].init_kind, InitKind::recycled);
  EXPECT_EQ(records[1].init_kind, InitKind::zero);
}

TEST(Scan, RecycledStartContinuesTheTrace) {
  const auto& p = testing::problem("h4_1a");
  const AdaptTrace& t = h4_trace();
  ScanOptions opt;
  opt.n_random = 0;
  std::vector<std::size_t> lengths;
  for (std::size_t L = 2; L <= t.iterations.size(); ++L) lengths.push_back(L);
  const auto records = scan_ansatz(p.hamiltonian, p.pool, p.reference, t, lengths, opt);
  for (const auto& r : records) {
    if (r.init_kind != InitKind::recycled) continue;
    EXPECT_NEAR(r.init_energy, t.iterations[r.ansatz_length - 2].energy, 1e-12);
    EXPECT_LE(r.energy_opt, r.init_energy + 1e-12);
    EXPECT_NEAR(r.energy_opt, t.iterations[r.ansatz_length - 1].energy, 1e-9);
  }
}

TEST(Scan, SelfBuiltRecycledChainMatchesTrace) {
  const auto& p = testing::problem("h4_1a");
  const AdaptTrace& t = h4_trace();
  ScanSpec spec;
  spec.op_indices = t.ansatz.op_indices;
  spec.lengths = {1, 5, 8};
  ScanOptions opt;
  opt.n_random = 0;
  const auto records = scan_ansatz(p.hamiltonian, p.pool, p.reference, spec, opt);
  for (const auto& r : records)
    if (r.init_kind == InitKind::recycled)
      EXPECT_NEAR(r.energy_opt, t.iterations[r.ansatz_length - 1].energy, 1e-9) << r.ansatz_length;
}

TEST(Scan, VariationalBound) {
  const auto& p = testing::problem("h4_1a");
  ScanOptions opt;
  opt.n_random = 10;
  opt.reference_energy = p.fci_energy;
  const auto records = scan_ansatz(p.hamiltonian, p.pool, p.reference, h4_trace(), {12, 18}, opt);
  for (const auto& r : records) EXPECT_GE(r.fci_error, -1e-9);
}

TEST(Scan, DeterministicAndThreadIndependent) {
  const auto& p = testing::problem("h4_1a");
  ScanOptions opt;
  opt.n_random = 6;
  opt.master_seed = 99;
  opt.threads = 1;
  const auto a = scan_ansatz(p.hamiltonian, p.pool, p.reference, h4_trace(), {6, 13}, opt);
  const auto b = scan_ansatz(p.hamiltonian, p.pool, p.reference, h4_trace(), {6, 13}, opt);
  opt.threads = 4;
  const auto c = scan_ansatz(p.hamiltonian, p.pool, p.reference, h4_trace(), {6, 13}, opt);
  expect_identical(a, b);
  expect_identical(a, c);
}

TEST(Scan, RejectsBadLengths) {
  const auto& p = testing::problem("h4_1a");
  EXPECT_THROW((void)scan_ansatz(p.hamiltonian, p.pool, p.reference, h4_trace(), {0}, ScanOptions{}),
               std::invalid_argument);
  EXPECT_THROW((void)scan_ansatz(p.hamiltonian, p.pool, p.reference, h4_trace(), {500}, ScanOptions{}),
               std::invalid_argument);
}

TEST(Cluster, Examples) {
  EXPECT_EQ(cluster_energies({-1.0, -1.0, -1.0}).size(), 1u);
  const auto c = cluster_energies({0.0, 1e-12, 0.5}, 1e-8);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].count, 2u);
  EXPECT_EQ(c[0].representative, 0.0);
  EXPECT_EQ(c[1].representative, 0.5);
  EXPECT_TRUE(cluster_energies({}).empty());
}

TEST(Cluster, OnlyConvergedRecordsCount) {
  std::vector<RestartRecord> r(3);
  r[0].energy_opt = -1.0;
  r[0].converged = true;
  r[1].energy_opt = -2.0;
  r[1].converged = false;
  r[2].energy_opt = -1.0 + 1e-10;
  r[2].converged = true;
  const auto c = cluster_traps(r);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].count, 2u);
}

TEST(Cluster, SpreadBoundedAndCountMonotoneUnderSupersets) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ud(0.0, 1e-7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> e;
    std::size_t prev = 0;
    for (int k = 0; k < 40; ++k) {
      e.push_back(ud(rng));
      const auto c = cluster_energies(e, 1e-8);
      std::size_t total = 0;
      for (std::size_t i = 0; i < c.size(); ++i) {
        EXPECT_LE(c[i].spread, 1e-8);
        if (i) EXPECT_GT(c[i].representative, c[i - 1].representative + 1e-8);
        total += c[i].count;
      }
      EXPECT_EQ(total, e.size());
      EXPECT_GE(c.size(), prev);
      prev = c.size();
    }
  }
}

TEST(Median, OddAndEven) {
  EXPECT_EQ(median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_EQ(median({4.0, 1.0, 2.0, 3.0}), 2.5);
  EXPECT_TRUE(std::isnan(median({})));
}

TEST(Variance, VanishesAtConvergedCenterAndGrowsWithWidth) {
  const auto& p = testing::problem("h4_1a");
  const AdaptTrace& t = h4_trace();
  const Ansatz a{t.ansatz.op_indices, t.ansatz.theta, 1};
  const std::vector<double> widths{0.0, 1e-3, std::numbers::pi / 2};
  const VarianceScan vs = variance_scan(p.hamiltonian, p.pool, p.reference, a, widths, 20, 3);
  ASSERT_EQ(vs.variances.size(), 3u);
  EXPECT_LT(vs.variances[0], 1e-17);
  EXPECT_LT(vs.variances[1], vs.variances[2]);
  for (double v : vs.variances) EXPECT_GE(v, 0.0);
  EXPECT_EQ(vs.center, a.theta);
}

TEST(Variance, SingleSampleIsFinite) {
  const auto& p = testing::problem("h4_1a");
  const Ansatz a{{22, 14, 19}, {0.1, 0.2, 0.3}, 1};
  const std::vector<double> widths{1.0};
  const VarianceScan vs = variance_scan(p.hamiltonian, p.pool, p.reference, a, widths, 1, 5);
  EXPECT_TRUE(std::isfinite(vs.variances[0]));
  EXPECT_GE(vs.variances[0], 0.0);
}

TEST(Variance, DeterministicAndStatisticallyStable) {
  const auto& p = testing::problem("h4_1a");
  const AdaptTrace& t = h4_trace();
  const Ansatz a{t.ansatz.op_indices, t.ansatz.theta, 1};
  const std::vector<double> widths{2.0 * std::numbers::pi};
  const VarianceScan s1 = variance_scan(p.hamiltonian, p.pool, p.reference, a, widths, 400, 1);
  const VarianceScan s1b = variance_scan(p.hamiltonian, p.pool, p.reference, a, widths, 400, 1, 3);
  const VarianceScan s2 = variance_scan(p.hamiltonian, p.pool, p.reference, a, widths, 400, 2);
  EXPECT_TRUE(same_bits(s1.variances[0], s1b.variances[0]));
  EXPECT_NEAR(s2.variances[0] / s1.variances[0], 1.0, 0.05);
}

TEST(Random, AnglesAreReproducibleAndInRange) {
  const auto a = random_angles(5, 1000);
  EXPECT_EQ(a, random_angles(5, 1000));
  EXPECT_NE(a, random_angles(6, 1000));
  double mean = 0.0;
  for (double t : a) {
    EXPECT_GE(t, 0.0);
    EXPECT_LT(t, 2.0 * std::numbers::pi);
    mean += t / 1000.0;
  }
  EXPECT_NEAR(mean, std::numbers::pi, 0.2);
  EXPECT_NE(restart_seed(1, 2, 3), restart_seed(1, 3, 2));
}

}  // namespace
}  // namespace avqe
