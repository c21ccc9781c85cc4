#include "irsee/optimize.hpp"

#include <cmath>
#include <vector>

namespace irsee {

namespace {

constexpr double kSaturated = 1.0 - 1e-15;

struct Evaluator {
  const OptimizationProblem& problem;
  mutable long count = 0;

  // Past the exponent guard the outage is saturated anyway; treating the
  // guard region as 1 keeps wide sweep brackets usable.
  double operator()(double p) const {
    ++count;
    try {
      return objective(problem, p);
    } catch (const std::overflow_error&) {
      return 1.0;
    }
  }
};

double fd_step(double p) { return std::max(1e-9, 1e-6 * p); }

// Central-difference derivative, clipped to the feasible interval.
double fd_derivative(const Evaluator& f, double p, double lo, double hi) {
  const double h = fd_step(p);
  const double a = std::max(lo, p - h);
  const double b = std::min(hi, p + h);
  return (f(b) - f(a)) / (b - a);
}

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> g(points);
  const double la = std::log(lo);
  const double lb = std::log(hi);
  for (int i = 0; i < points; ++i) {
    g[i] = std::exp(la + (lb - la) * i / (points - 1.0));
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

}  // namespace

double objective(const OptimizationProblem& problem, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw std::domain_error("objective: p must be finite and > 0");
  }
  SystemConfig cfg = problem.config;
  cfg.p_tx = p;
  return op_ee_gamma(cfg, problem.model, problem.eta);
}

Optimum minimize_op(const OptimizationProblem& problem) {
  if (!(problem.p_min > 0.0) || !(problem.p_min < problem.p_max) ||
      !std::isfinite(problem.p_max)) {
    throw std::domain_error("minimize_op: requires 0 < p_min < p_max");
  }
  const Evaluator f{problem};
  const double lo = problem.p_min;
  const double hi = problem.p_max;

  // Coarse log-spaced scan to bracket the dip.
  const auto grid = log_grid(lo, hi, 129);
  std::vector<double> fg(grid.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    fg[i] = f(grid[i]);
    if (fg[i] < fg[best]) best = i;
  }
  if (fg[best] >= kSaturated) {
    throw InfeasibleError(
        "minimize_op: outage is saturated at 1 over the whole interval");
  }

  // Minimum pinned to an endpoint: report the boundary point flagged.
  if (best == 0 && fd_derivative(f, lo, lo, hi) > 0.0) {
    return {lo, fg.front(), f.count, 0.0, true};
  }
  if (best == grid.size() - 1 && fd_derivative(f, hi, lo, hi) < 0.0) {
    return {hi, fg.back(), f.count, 0.0, true};
  }

  double bl = grid[best == 0 ? 0 : best - 1];
  double bh = grid[std::min(best + 1, grid.size() - 1)];
  const double f_best_coarse = fg[best];

  // Golden-section in log(p) until the linear bracket is narrow enough.
  const double width_target = 1e-8 * problem.p_max;
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double la = std::log(bl);
  double lb = std::log(bh);
  double lc = lb - invphi * (lb - la);
  double ld = la + invphi * (lb - la);
  double fc = f(std::exp(lc));
  double fd = f(std::exp(ld));
  for (int it = 0; it < 400 && std::exp(lb) - std::exp(la) > width_target;
       ++it) {
    if (fc < fd) {
      lb = ld;
      ld = lc;
      fd = fc;
      lc = lb - invphi * (lb - la);
      fc = f(std::exp(lc));
    } else {
      la = lc;
      lc = ld;
      fc = fd;
      ld = la + invphi * (lb - la);
      fd = f(std::exp(ld));
    }
  }
  double p_star = std::exp(0.5 * (la + lb));
  double op_star = f(p_star);

  // Plateau ties can strand golden section away from the dip; a nested grid
  // refinement of the coarse bracket recovers it.
  if (op_star > f_best_coarse) {
    double rl = bl, rh = bh;
    while (rh - rl > width_target) {
      const auto sub = log_grid(rl, rh, 33);
      std::size_t j = 0;
      double fj = f(sub[0]);
      for (std::size_t i = 1; i < sub.size(); ++i) {
        const double fi = f(sub[i]);
        if (fi < fj) {
          j = i;
          fj = fi;
        }
      }
      rl = sub[j == 0 ? 0 : j - 1];
      rh = sub[std::min(j + 1, sub.size() - 1)];
    }
    la = std::log(rl);
    lb = std::log(rh);
    p_star = std::exp(0.5 * (la + lb));
    op_star = f(p_star);
  }

  // Derivative bisection polish on a step-sized safeguard interval.
  {
    double a = std::max(lo, p_star - 4.0 * fd_step(p_star));
    double b = std::min(hi, p_star + 4.0 * fd_step(p_star));
    double ga = fd_derivative(f, a, lo, hi);
    double gb = fd_derivative(f, b, lo, hi);
    if (ga < 0.0 && gb > 0.0) {
      for (int it = 0; it < 60 && b - a > 0.25 * fd_step(p_star); ++it) {
        const double m = 0.5 * (a + b);
        const double gm = fd_derivative(f, m, lo, hi);
        if (gm < 0.0) {
          a = m;
        } else {
          b = m;
        }
      }
      const double candidate = 0.5 * (a + b);
      const double f_candidate = f(candidate);
      if (f_candidate <= op_star) {
        p_star = candidate;
        op_star = f_candidate;
      }
    }
  }

  const bool boundary = p_star <= lo * (1.0 + 1e-9) || p_star >= hi * (1.0 - 1e-9);
  return {p_star, op_star, f.count, std::exp(lb) - std::exp(la), boundary};
}

int required_elements(const SystemConfig& config, const ChannelModel& model,
                      EeThreshold eta, double p, double op_target, int n_max) {
  if (!(op_target > 0.0) || !(op_target <= 1.0)) {
    throw std::domain_error("required_elements: op_target must be in (0, 1]");
  }
  if (n_max < 1) {
    throw std::domain_error("required_elements: n_max must be >= 1");
  }
  SystemConfig cfg = config;
  cfg.p_tx = p;
  const auto op_at = [&](int n) {
    cfg.n_elements = n;
    return op_ee_gamma(cfg, model, eta);
  };

  if (op_at(1) <= op_target) return 1;
  if (n_max == 1) {
    throw NotAchievableError(
        "required_elements: target not achievable with n_max elements");
  }

  // Exponential bracketing: first power of two that meets the target.
  int hi = 1;
  while (op_at(std::min(2 * hi, n_max)) > op_target) {
    hi = std::min(2 * hi, n_max);
    if (hi == n_max) {
      throw NotAchievableError(
          "required_elements: target not achievable with n_max elements");
    }
  }
  int lo = hi;  // op(lo) > target, op(hi) <= target after the update below
  hi = std::min(2 * hi, n_max);

  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (op_at(mid) <= op_target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace irsee
