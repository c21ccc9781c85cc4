#include "irsee/channel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <utility>
#include <vector>

#include "irsee/quadrature.hpp"
#include "irsee/rng.hpp"
#include "irsee/specfun.hpp"

namespace irsee {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

struct MeanVar {
  double mean;
  double variance;
};

MeanVar mean_var(const ChannelModel& model) {
  const double m1 = raw_moment(model, 1);
  const double m2 = raw_moment(model, 2);
  return {m1, m2 - m1 * m1};
}

// Draws one product alpha * beta from the given substream. Rician envelopes
// consume one Box-Muller pair each; Rayleigh envelopes one uniform each.
struct ProductSampler {
  const ChannelModel& model;

  double operator()(rng::Substream& rs) const {
    if (const auto* ric = std::get_if<Rician>(&model)) {
      return rician_envelope(rs, ric->k1, ric->omega1) *
             rician_envelope(rs, ric->k2, ric->omega2);
    }
    const auto& ray = std::get<Rayleigh>(model);
    return rayleigh_envelope(rs, ray.sigma) * rayleigh_envelope(rs, ray.sigma);
  }

  static double rician_envelope(rng::Substream& rs, double k, double omega) {
    const double sigma_hat = std::sqrt(omega / (2.0 * (1.0 + k)));
    const double los = std::sqrt(k * omega / (1.0 + k));
    double z0, z1;
    rs.next_normal_pair(z0, z1);
    const double re = los + sigma_hat * z0;
    const double im = sigma_hat * z1;
    return std::sqrt(re * re + im * im);
  }

  static double rayleigh_envelope(rng::Substream& rs, double sigma) {
    return sigma * std::sqrt(-2.0 * std::log(rs.next_unit()));
  }
};

// Internal seed for the Rician third-moment estimate; fixed so that
// product_moments stays a deterministic function of the model.
constexpr std::uint64_t kCentral3Seed = 0x9E3779B97F4A7C15ull;
constexpr long kCentral3Trials = 20'000'000;

}  // namespace

void validate(const ChannelModel& model) {
  if (const auto* ric = std::get_if<Rician>(&model)) {
    const bool ok = std::isfinite(ric->k1) && ric->k1 >= 0.0 &&
                    std::isfinite(ric->k2) && ric->k2 >= 0.0 &&
                    positive_finite(ric->omega1) && positive_finite(ric->omega2);
    if (!ok) {
      throw std::domain_error(
          "ChannelModel: Rician requires k1,k2 >= 0 and omega1,omega2 > 0");
    }
    return;
  }
  if (!positive_finite(std::get<Rayleigh>(model).sigma)) {
    throw std::domain_error("ChannelModel: Rayleigh requires sigma > 0");
  }
}

double raw_moment(const ChannelModel& model, int k) {
  validate(model);
  if (k < 1 || k > 4) {
    throw std::domain_error("raw_moment: k must be in {1, 2, 3, 4}");
  }
  const double half_k = 0.5 * k;
  const double gamma_sq = std::exp(2.0 * ln_gamma(1.0 + half_k));
  if (const auto* ric = std::get_if<Rician>(&model)) {
    // E[x^k] = (O1 O2)^(k/2) Gamma(1+k/2)^2 / ((1+K1)(1+K2))^(k/2)
    //          * e^(-K1) 1F1(1+k/2; 1; K1) * e^(-K2) 1F1(1+k/2; 1; K2)
    return std::pow(ric->omega1 * ric->omega2, half_k) * gamma_sq *
           std::pow((1.0 + ric->k1) * (1.0 + ric->k2), -half_k) *
           hyp1f1_b1_scaled(1.0 + half_k, ric->k1) *
           hyp1f1_b1_scaled(1.0 + half_k, ric->k2);
  }
  const double sigma = std::get<Rayleigh>(model).sigma;
  return std::pow(2.0 * sigma * sigma, k) * gamma_sq;
}

namespace {

// E|x - m|^3 for the Rayleigh product, integrated against the exact density
// f(y) = (y / rho^2) K0(y / rho) with rho = sigma^2.
double rayleigh_central3_abs(double sigma, double mean) {
  const double rho = sigma * sigma;
  const auto integrand = [rho, mean](double y) {
    const double d = std::abs(y - mean);
    return d * d * d * (y / (rho * rho)) * detail::bessel_k0(y / rho);
  };
  // The moment scales like (2 sigma^2)^3; keep the tolerance relative to it.
  const double tol = 0.5e-12 * std::max(1.0, 8.0 * rho * rho * rho);
  const double upper = 2.0 * mean + 150.0 * rho;
  return integrate(integrand, 0.0, mean, tol) +
         integrate(integrand, mean, upper, tol);
}

// Streaming Monte-Carlo estimate of E|x - m|^3 for the Rician product.
// Accumulation runs over fixed-size chunks combined in chunk order, so the
// result is identical no matter how many threads computed the chunks.
std::pair<double, double> rician_central3_abs(const ChannelModel& model,
                                              double mean) {
  const ProductSampler sampler{model};
  constexpr long kChunk = 1L << 20;
  const long n_chunks = (kCentral3Trials + kChunk - 1) / kChunk;
  std::vector<double> sums(n_chunks, 0.0);
  std::vector<double> sums_sq(n_chunks, 0.0);

  const auto run_chunk = [&](long chunk) {
    const long begin = chunk * kChunk;
    const long end = std::min(kCentral3Trials, begin + kChunk);
    double s = 0.0, s2 = 0.0;
    for (long t = begin; t < end; ++t) {
      rng::Substream rs(kCentral3Seed, static_cast<std::uint64_t>(t));
      const double d = std::abs(sampler(rs) - mean);
      const double v = d * d * d;
      s += v;
      s2 += v * v;
    }
    sums[chunk] = s;
    sums_sq[chunk] = s2;
  };

  int nthreads = static_cast<int>(std::thread::hardware_concurrency());
  nthreads = std::clamp(nthreads, 1, 8);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::atomic<long> next{0};
  for (int w = 0; w < nthreads; ++w) {
    pool.emplace_back([&] {
      for (long c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) {
        run_chunk(c);
      }
    });
  }
  for (auto& th : pool) th.join();

  double sum = 0.0, sum_sq = 0.0;
  for (long c = 0; c < n_chunks; ++c) {
    sum += sums[c];
    sum_sq += sums_sq[c];
  }
  const double n = static_cast<double>(kCentral3Trials);
  const double est = sum / n;
  const double var = std::max(0.0, sum_sq / n - est * est);
  return {est, std::sqrt(var / n)};
}

}  // namespace

ProductMoments product_moments(const ChannelModel& model) {
  ProductMoments pm;
  pm.mean = raw_moment(model, 1);
  pm.raw2 = raw_moment(model, 2);
  pm.raw3 = raw_moment(model, 3);
  pm.variance = pm.raw2 - pm.mean * pm.mean;
  pm.central3_signed =
      pm.raw3 - 3.0 * pm.mean * pm.raw2 + 2.0 * pm.mean * pm.mean * pm.mean;
  if (const auto* ray = std::get_if<Rayleigh>(&model)) {
    pm.central3_abs = rayleigh_central3_abs(ray->sigma, pm.mean);
    pm.central3_abs_stderr = 0.0;
  } else {
    const auto [est, se] = rician_central3_abs(model, pm.mean);
    pm.central3_abs = est;
    pm.central3_abs_stderr = se;
  }
  return pm;
}

GammaFit fit_gamma(const ChannelModel& model, int n) {
  if (n < 1) throw std::domain_error("fit_gamma: n must be >= 1");
  const auto [m, v] = mean_var(model);
  return {n * m * m / v, v / m};
}

GaussianFit fit_gaussian(const ChannelModel& model, int n) {
  if (n < 1) throw std::domain_error("fit_gaussian: n must be >= 1");
  const auto [m, v] = mean_var(model);
  return {n * m, n * v};
}

Eigen::ArrayXd sample_products(const ChannelModel& model, int n, long trials,
                               std::uint64_t seed, int workers) {
  validate(model);
  if (n < 1) throw std::domain_error("sample_products: n must be >= 1");
  if (trials < 1) throw std::domain_error("sample_products: trials must be >= 1");

  Eigen::ArrayXd x(trials);
  const ProductSampler sampler{model};
  const auto fill = [&](long begin, long end) {
    for (long t = begin; t < end; ++t) {
      rng::Substream rs(seed, static_cast<std::uint64_t>(t));
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += sampler(rs);
      x[t] = acc;
    }
  };

  int nthreads = workers > 0
                     ? workers
                     : static_cast<int>(std::thread::hardware_concurrency());
  if (nthreads < 1) nthreads = 1;
  nthreads = static_cast<int>(
      std::min<long>(nthreads, std::max<long>(1, trials / 4096)));
  if (nthreads == 1) {
    fill(0, trials);
    return x;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  const long chunk = (trials + nthreads - 1) / nthreads;
  for (int w = 0; w < nthreads; ++w) {
    const long begin = w * chunk;
    const long end = std::min(trials, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(fill, begin, end);
  }
  for (auto& th : pool) th.join();
  return x;
}

}  // namespace irsee
