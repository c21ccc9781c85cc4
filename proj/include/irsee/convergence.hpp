#pragma once

// Berry-Esseen bound on the distance between the CDF of X and its CLT
// approximation, and the Gamma-vs-CLT approximation-error sweep over N.

#include <vector>

#include "irsee/outage.hpp"

namespace irsee {

struct BerryEsseenReport {
  int n_elements = 0;
  double bound = 0.0;          // 0.56 rho_abs / (Var^1.5 sqrt(N))
  double empirical_gap = 0.0;  // sup over grid of |F_gamma - Phi|
  double gap_at_threshold = 0.0;  // |op_ee_gamma - op_ee_clt| at sqrt(Q)
  Eigen::ArrayXd grid;         // evaluation abscissas
};

/// 0.56 * E|x - E x|^3 / (Var(x)^(3/2) sqrt(n)).
double berry_esseen_bound(const ProductMoments& pm, int n);
double berry_esseen_bound(const ChannelModel& model, int n);

/// For each N, evaluates the two CDF approximations of X on `grid_size`
/// uniform points covering the central mu +/- 4 sigma region (clipped at 0)
/// and records the sup gap, the analytic bound, and the gap at the sqrt(Q)
/// implied by (config, eta). grid_size == 1 evaluates at the center alone.
std::vector<BerryEsseenReport> approximation_error_sweep(
    const SystemConfig& config, const ChannelModel& model,
    const std::vector<int>& n_values, EeThreshold eta, int grid_size = 512);

}  // namespace irsee
