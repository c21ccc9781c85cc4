#include "irsee/outage.hpp"

#include <cmath>
#include <numbers>

#include "irsee/specfun.hpp"

namespace irsee {

namespace {

constexpr double kExponentGuardBits = 1000.0;  // 2^1024 would overflow

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

QThreshold threshold_from_bits(const SystemConfig& config, double bits) {
  if (bits > kExponentGuardBits) {
    throw std::overflow_error(
        "q_threshold: threshold exponent exceeds the 1000-bit guard");
  }
  const double gamma_bar = config.p_tx / config.n0;
  const double q = std::expm1(bits * std::numbers::ln2) / gamma_bar;
  return {q, std::sqrt(q)};
}

}  // namespace

void validate(const SystemConfig& config, bool require_p_tx) {
  const bool ok = config.n_elements >= 1 && positive_finite(config.p_circuit) &&
                  positive_finite(config.p_irs) && positive_finite(config.n0) &&
                  (!require_p_tx || positive_finite(config.p_tx));
  if (!ok) {
    throw std::domain_error(
        "SystemConfig: requires n_elements >= 1 and positive finite powers");
  }
}

double total_power(const SystemConfig& config) {
  return config.p_tx + config.p_circuit + config.p_irs;
}

double snr(const SystemConfig& config, double x) {
  validate(config);
  if (!(x >= 0.0)) throw std::domain_error("snr: x must be >= 0");
  return config.p_tx / config.n0 * x * x;
}

double energy_efficiency(const SystemConfig& config, double x) {
  return std::log1p(snr(config, x)) / std::numbers::ln2 / total_power(config);
}

QThreshold q_threshold(const SystemConfig& config, EeThreshold eta) {
  validate(config);
  if (!positive_finite(eta.eta_th)) {
    throw std::domain_error("q_threshold: eta_th must be > 0");
  }
  return threshold_from_bits(config, eta.eta_th * total_power(config));
}

QThreshold rate_q_threshold(const SystemConfig& config, RateThreshold rate) {
  validate(config);
  if (!positive_finite(rate.r_th)) {
    throw std::domain_error("rate_q_threshold: r_th must be > 0");
  }
  return threshold_from_bits(config, rate.r_th);
}

namespace detail {

double gamma_cdf(const GammaFit& fit, double x) {
  if (x <= 0.0) return 0.0;
  const double z = x / fit.scale;
  if (!std::isfinite(z)) return 1.0;  // beyond any representable support
  return reg_lower_incomplete_gamma(fit.shape, z);
}

double gaussian_cdf(const GaussianFit& fit, double x) {
  return normal_cdf((x - fit.mu) / std::sqrt(fit.sigma2));
}

}  // namespace detail

double op_ee_gamma(const SystemConfig& config, const ChannelModel& model,
                   EeThreshold eta) {
  const QThreshold qt = q_threshold(config, eta);
  return detail::gamma_cdf(fit_gamma(model, config.n_elements), qt.sqrt_q);
}

double op_ee_clt(const SystemConfig& config, const ChannelModel& model,
                 EeThreshold eta) {
  const QThreshold qt = q_threshold(config, eta);
  return detail::gaussian_cdf(fit_gaussian(model, config.n_elements), qt.sqrt_q);
}

double op_rate(const SystemConfig& config, const ChannelModel& model,
               RateThreshold rate, Method method) {
  const QThreshold qt = rate_q_threshold(config, rate);
  if (method == Method::gamma) {
    return detail::gamma_cdf(fit_gamma(model, config.n_elements), qt.sqrt_q);
  }
  return detail::gaussian_cdf(fit_gaussian(model, config.n_elements), qt.sqrt_q);
}

}  // namespace irsee
