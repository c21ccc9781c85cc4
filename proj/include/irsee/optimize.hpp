#pragma once

// Global minimization of the EE outage probability over transmit power.
// The objective is strictly pseudo-convex in p (composition of a strictly
// convex threshold map with the quasi-convex Gamma CDF), so a line search
// finds the unique global minimum.

#include "irsee/outage.hpp"

namespace irsee {

struct OptimizationProblem {
  SystemConfig config;  // p_tx is ignored; the optimizer owns it
  ChannelModel model = Rayleigh{};
  EeThreshold eta;
  double p_max = 10.0;  // W
  double p_min = 1e-6;  // W; keeps clear of the p -> 0 singularity
};

struct Optimum {
  double p_star = 0.0;
  double op_star = 1.0;
  long iterations = 0;      // objective evaluations
  double bracket_width = 0.0;
  bool at_boundary = false;  // minimizer pinned to p_min or p_max
};

/// op_ee_gamma with p_tx = p; identical code path, bit for bit.
double objective(const OptimizationProblem& problem, double p);

/// Coarse log-spaced scan, golden-section refinement to a bracket narrower
/// than 1e-8 * p_max, then a safeguarded bisection on the central-difference
/// derivative. Throws InfeasibleError when the objective is saturated at 1
/// over the whole interval.
Optimum minimize_op(const OptimizationProblem& problem);

/// Smallest N <= n_max with op_ee_gamma <= op_target at transmit power p
/// (exponential bracketing + binary search; the OP is nonincreasing in N).
/// Throws NotAchievableError when even n_max misses the target.
int required_elements(const SystemConfig& config, const ChannelModel& model,
                      EeThreshold eta, double p, double op_target, int n_max);

}  // namespace irsee
