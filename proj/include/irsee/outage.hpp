#pragma once

// Closed-form (Gamma) and CLT outage probabilities of energy efficiency and
// of rate, plus the SNR / EE helper formulas. All powers are linear watts;
// dBm exists only at the CLI boundary.

#include "irsee/channel.hpp"

namespace irsee {

struct SystemConfig {
  int n_elements = 4;     // reflecting elements N
  double p_tx = 1.0;      // transmit power, W
  double p_circuit = 0.01;  // static circuit power, W
  double p_irs = 0.01;    // surface static power, W
  double n0 = 1e-12;      // noise power, W
};

struct EeThreshold {
  double eta_th = 2.0;  // target energy efficiency, bits/Hz/joule
};

struct RateThreshold {
  double r_th = 2.0;  // target rate, bits/s/Hz
};

/// Outage threshold on X^2 and on X.
struct QThreshold {
  double q = 0.0;
  double sqrt_q = 0.0;
};

enum class Method { gamma, clt };

/// Throws std::domain_error for out-of-range parameters. p_tx is only
/// checked when `require_p_tx` is set; optimization sweeps it separately.
void validate(const SystemConfig& config, bool require_p_tx = true);

/// Total consumed power P_T = p_tx + p_circuit + p_irs.
double total_power(const SystemConfig& config);

/// End-to-end SNR (p_tx / n0) x^2 for a channel sum value x.
double snr(const SystemConfig& config, double x);

/// log2(1 + snr) / P_T in bits/Hz/joule.
double energy_efficiency(const SystemConfig& config, double x);

/// EE outage threshold Q = (2^(eta_th P_T) - 1) / (p_tx / n0). Throws
/// std::overflow_error when eta_th * P_T exceeds the 1000-bit exponent guard.
QThreshold q_threshold(const SystemConfig& config, EeThreshold eta);

/// Rate outage threshold Q = (2^r_th - 1) / (p_tx / n0).
QThreshold rate_q_threshold(const SystemConfig& config, RateThreshold rate);

/// P[EE < eta_th] under the Gamma approximation of X.
double op_ee_gamma(const SystemConfig& config, const ChannelModel& model,
                   EeThreshold eta);

/// P[EE < eta_th] under the CLT approximation of X.
double op_ee_clt(const SystemConfig& config, const ChannelModel& model,
                 EeThreshold eta);

/// P[rate < r_th] under the selected approximation.
double op_rate(const SystemConfig& config, const ChannelModel& model,
               RateThreshold rate, Method method);

namespace detail {
/// CDF of the fitted Gamma at an arbitrary abscissa x >= 0.
double gamma_cdf(const GammaFit& fit, double x);
/// CDF of the fitted Gaussian at an arbitrary abscissa.
double gaussian_cdf(const GaussianFit& fit, double x);
}  // namespace detail

}  // namespace irsee
