// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "avqe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include <Eigen/Dense>
#include <fmt/format.h>

namespace avqe {

namespace {

using Vec = Eigen::VectorXd;

struct Sample {
  double alpha = 0.0;
  double f = 0.0;
  double d = 0.0;  // directional derivative
  Vec x;
  Vec g;
};

class LineSearch {
 public:
  LineSearch(const Objective& obj, const BfgsOptions& opt, std::size_t& evals)
      : obj_(obj), opt_(opt), evals_(evals) {}

  // Strong-Wolfe search along p from (x0, f0, g0). Returns the accepted sample.
  std::optional<Sample> run(const Vec& x0, double f0, const Vec& g0, const Vec& p, double alpha_init) {
    x0_ = &x0;
    p_ = &p;
    f0_ = f0;
    d0_ = g0.dot(p);
    eps_ = opt_.f_noise * std::max(1.0, std::abs(f0));
    n_evals_ = 0;

    Sample prev{0.0, f0, d0_, x0, g0};
    double alpha = alpha_init;
    for (int i = 0; n_evals_ < opt_.max_line_search_evals; ++i) {
      Sample cur = eval(alpha);
      if (!armijo(cur) || (i > 0 && cur.f > prev.f + eps_)) return zoom(prev, cur);
      if (std::abs(cur.d) <= -opt_.c2 * d0_) return cur;
      if (cur.d >= 0.0) return zoom(cur, prev);
      prev = std::move(cur);
      alpha *= 2.0;
    }
    return std::nullopt;
  }

 private:
  bool armijo(const Sample& s) const { return s.f <= f0_ + opt_.c1 * s.alpha * d0_ + eps_; }

  Sample eval(double alpha) {
    Sample s;
    s.alpha = alpha;
    s.x = *x0_ + alpha * *p_;
    s.g.resize(s.x.size());
    s.f = obj_(std::span<const double>(s.x.data(), static_cast<std::size_t>(s.x.size())),
               std::span<double>(s.g.data(), static_cast<std::size_t>(s.g.size())));
    ++evals_;
    ++n_evals_;
    if (!std::isfinite(s.f) || !s.g.allFinite())
      throw OptimizationError(fmt::format("non-finite objective at step length {} (f = {})", alpha, s.f));
    s.d = s.g.dot(*p_);
    return s;
  }

  static double cubic_min(const Sample& a, const Sample& b) {
    const double d1 = a.d + b.d - 3.0 * (a.f - b.f) / (a.alpha - b.alpha);
    const double disc = d1 * d1 - a.d * b.d;
    if (!(disc >= 0.0)) return std::numeric_limits<double>::quiet_NaN();
    const double d2 = std::copysign(std::sqrt(disc), b.alpha - a.alpha);
    return b.alpha - (b.alpha - a.alpha) * (b.d + d2 - d1) / (b.d - a.d + 2.0 * d2);
  }

  std::optional<Sample> zoom(Sample lo, Sample hi) {
    while (n_evals_ < opt_.max_line_search_evals) {
      const double left = std::min(lo.alpha, hi.alpha);
      const double right = std::max(lo.alpha, hi.alpha);
      const double width = right - left;
      if (width <= 1e-16 * std::max(1.0, right)) break;
      double alpha = cubic_min(lo, hi);
      if (!std::isfinite(alpha) || alpha < left + 0.1 * width || alpha > right - 0.1 * width)
        alpha = 0.5 * (left + right);
      Sample cur = eval(alpha);
      if (!armijo(cur) || cur.f > lo.f + eps_) {
        hi = std::move(cur);
        continue;
      }
      if (std::abs(cur.d) <= -opt_.c2 * d0_) return cur;
      if (cur.d * (hi.alpha - lo.alpha) >= 0.0) hi = lo;
      lo = std::move(cur);
    }
    // Fall back to the best decreasing point found, if it moved at all.
    if (lo.alpha > 0.0 && armijo(lo)) return lo;
    return std::nullopt;
  }

  const Objective& obj_;
  const BfgsOptions& opt_;
  std::size_t& evals_;
  const Vec* x0_ = nullptr;
  const Vec* p_ = nullptr;
  double f0_ = 0.0;
  double d0_ = 0.0;
  double eps_ = 0.0;
  std::size_t n_evals_ = 0;
};

}  // namespace

OptimizationResult minimize(const Objective& objective, std::vector<double> theta0, const BfgsOptions& options) {
  const auto n = static_cast<Eigen::Index>(theta0.size());
  const std::size_t max_iter = options.max_iter ? options.max_iter : 10 * theta0.size() + 200;

  OptimizationResult res;
  Vec x = Eigen::Map<const Vec>(theta0.data(), n);
  Vec g(n);
  double f = objective(std::span<const double>(x.data(), theta0.size()), std::span<double>(g.data(), theta0.size()));
  res.n_energy_evals = 1;
  if (!std::isfinite(f) || !g.allFinite()) throw OptimizationError(fmt::format("non-finite objective at start (f = {})", f));

  Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(n, n);
  LineSearch ls(objective, options, res.n_energy_evals);
  double f_prev = f + 0.5 * g.norm();
  bool fresh_hessian = true;

  auto finish = [&](bool converged, std::string msg) {
    res.theta_opt.assign(x.data(), x.data() + n);
    res.energy = f;
    res.grad_inf_norm = n ? g.lpNorm<Eigen::Infinity>() : 0.0;
    res.converged = converged;
    res.message = std::move(msg);
    return res;
  };

  while (true) {
    if (n == 0 || g.lpNorm<Eigen::Infinity>() <= options.gtol) return finish(true, "gradient below gtol");
    if (res.n_iterations >= max_iter) return finish(false, "maximum iterations reached");

    Vec p = -hinv * g;
    double d0 = g.dot(p);
    if (!(d0 < 0.0)) {
      hinv.setIdentity();
      fresh_hessian = true;
      p = -g;
      d0 = g.dot(p);
    }
    double alpha0 = 1.0;
    const double guess = 1.01 * 2.0 * (f - f_prev) / d0;
    if (std::isfinite(guess) && guess > 0.0) alpha0 = std::min(1.0, guess);

    std::optional<Sample> step = ls.run(x, f, g, p, alpha0);
    if (!step && !fresh_hessian) {
      // Retry once along steepest descent before giving up.
      hinv.setIdentity();
      fresh_hessian = true;
      p = -g;
      step = ls.run(x, f, g, p, std::min(1.0, 1.0 / std::max(g.norm(), 1e-300)));
    }
    if (!step) return finish(false, "line search failed");

    const Vec s = step->x - x;
    const Vec y = step->g - g;
    f_prev = f;
    x = step->x;
    f = step->f;
    g = step->g;
    ++res.n_iterations;

    const double ys = y.dot(s);
    if (ys > 1e-300 && std::isfinite(ys)) {
      const double rho = 1.0 / ys;
      const Vec hy = hinv * y;
      const double yhy = y.dot(hy);
      hinv.noalias() -= rho * (hy * s.transpose() + s * hy.transpose());
      hinv.noalias() += (rho * rho * yhy + rho) * (s * s.transpose());
      fresh_hessian = false;
    }
  }
}

}  // namespace avqe
