#include "irsee/convergence.hpp"

#include <cmath>

namespace irsee {

namespace {
constexpr double kBerryEsseenC = 0.56;
}

double berry_esseen_bound(const ProductMoments& pm, int n) {
  if (n < 1) throw std::domain_error("berry_esseen_bound: n must be >= 1");
  return kBerryEsseenC * pm.central3_abs /
         (std::pow(pm.variance, 1.5) * std::sqrt(static_cast<double>(n)));
}

double berry_esseen_bound(const ChannelModel& model, int n) {
  return berry_esseen_bound(product_moments(model), n);
}

std::vector<BerryEsseenReport> approximation_error_sweep(
    const SystemConfig& config, const ChannelModel& model,
    const std::vector<int>& n_values, EeThreshold eta, int grid_size) {
  if (n_values.empty()) {
    throw std::domain_error("approximation_error_sweep: n_values is empty");
  }
  if (grid_size < 1) {
    throw std::domain_error("approximation_error_sweep: grid_size must be >= 1");
  }
  const ProductMoments pm = product_moments(model);

  std::vector<BerryEsseenReport> reports;
  reports.reserve(n_values.size());
  for (const int n : n_values) {
    const GammaFit gf = fit_gamma(model, n);
    const GaussianFit nf = fit_gaussian(model, n);
    const double sigma = std::sqrt(nf.sigma2);

    BerryEsseenReport rep;
    rep.n_elements = n;
    rep.bound = berry_esseen_bound(pm, n);

    rep.grid.resize(grid_size);
    const double lo = std::max(0.0, nf.mu - 4.0 * sigma);
    const double hi = nf.mu + 4.0 * sigma;
    if (grid_size == 1) {
      rep.grid[0] = 0.5 * (lo + hi);
    } else {
      for (int i = 0; i < grid_size; ++i) {
        rep.grid[i] = lo + (hi - lo) * i / (grid_size - 1.0);
      }
    }

    double gap = 0.0;
    for (int i = 0; i < grid_size; ++i) {
      gap = std::max(gap, std::abs(detail::gamma_cdf(gf, rep.grid[i]) -
                                   detail::gaussian_cdf(nf, rep.grid[i])));
    }
    rep.empirical_gap = gap;

    SystemConfig cfg = config;
    cfg.n_elements = n;
    rep.gap_at_threshold =
        std::abs(op_ee_gamma(cfg, model, eta) - op_ee_clt(cfg, model, eta));
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace irsee
