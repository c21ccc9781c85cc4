#include "irsee/mcsim.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace irsee {

namespace {

void check_trials(long trials) {
  if (trials < 100) throw std::domain_error("mcsim: trials must be >= 100");
}

McEstimate binomial_estimate(long below, long trials, std::uint64_t seed) {
  const double p = static_cast<double>(below) / static_cast<double>(trials);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(trials)), trials,
          seed};
}

}  // namespace

McEstimate fraction_below(const Eigen::ArrayXd& samples, double threshold,
                          std::uint64_t seed) {
  const long below = (samples < threshold).count();
  return binomial_estimate(below, samples.size(), seed);
}

McEstimate mc_op_ee(const SystemConfig& config, const ChannelModel& model,
                    EeThreshold eta, long trials, std::uint64_t seed) {
  check_trials(trials);
  const QThreshold qt = q_threshold(config, eta);
  const Eigen::ArrayXd x =
      sample_products(model, config.n_elements, trials, seed);
  return fraction_below(x, qt.sqrt_q, seed);
}

McEstimate mc_op_rate(const SystemConfig& config, const ChannelModel& model,
                      RateThreshold rate, long trials, std::uint64_t seed) {
  check_trials(trials);
  const QThreshold qt = rate_q_threshold(config, rate);
  const Eigen::ArrayXd x =
      sample_products(model, config.n_elements, trials, seed);
  return fraction_below(x, qt.sqrt_q, seed);
}

Eigen::ArrayXd mc_cdf(const ChannelModel& model, int n, long trials,
                      std::uint64_t seed, const Eigen::ArrayXd& grid) {
  check_trials(trials);
  for (Eigen::Index i = 1; i < grid.size(); ++i) {
    if (grid[i] < grid[i - 1]) {
      throw std::domain_error("mc_cdf: grid must be sorted ascending");
    }
  }
  Eigen::ArrayXd x = sample_products(model, n, trials, seed);
  std::sort(x.data(), x.data() + x.size());
  Eigen::ArrayXd cdf(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const auto it = std::lower_bound(x.data(), x.data() + x.size(), grid[i]);
    cdf[i] = static_cast<double>(it - x.data()) / static_cast<double>(trials);
  }
  return cdf;
}

}  // namespace irsee
