#pragma once

// Monte-Carlo oracle for the outage quantities. Estimates are deterministic
// given (trials, seed) and independent of how sampling was parallelized.

#include <cstdint>

#include "irsee/outage.hpp"

namespace irsee {

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;  // sqrt(p (1-p) / trials)
  long trials = 0;
  std::uint64_t seed = 0;
};

/// Fraction of trials with X below sqrt(Q) for the EE threshold.
McEstimate mc_op_ee(const SystemConfig& config, const ChannelModel& model,
                    EeThreshold eta, long trials, std::uint64_t seed);

/// Fraction of trials with X below sqrt(Q) for the rate threshold.
McEstimate mc_op_rate(const SystemConfig& config, const ChannelModel& model,
                      RateThreshold rate, long trials, std::uint64_t seed);

/// Empirical CDF of X on a sorted grid of abscissas.
Eigen::ArrayXd mc_cdf(const ChannelModel& model, int n, long trials,
                      std::uint64_t seed, const Eigen::ArrayXd& grid);

/// Binomial estimate from an existing sample matrix; lets a power sweep
/// reuse one draw of X for every threshold.
McEstimate fraction_below(const Eigen::ArrayXd& samples, double threshold,
                          std::uint64_t seed);

}  // namespace irsee
