#pragma once

// Scalar special-function kernels used by the channel, outage and
// convergence modules. All functions are pure and thread-safe.

#include "irsee/errors.hpp"

namespace irsee {

/// Trade-off knobs for the iterative kernels. rel_tol is the relative
/// stopping tolerance of a series / continued fraction, max_terms the
/// iteration budget before a ConvergenceError is raised.
struct Precision {
  double rel_tol = 1e-12;
  int max_terms = 500;
};

/// ln Gamma(x) for x > 0 (Lanczos approximation).
double ln_gamma(double x);

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
/// Series expansion for x < a + 1, Lentz continued fraction otherwise.
double reg_lower_incomplete_gamma(double a, double x, const Precision& prec = {});

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double reg_upper_incomplete_gamma(double a, double x, const Precision& prec = {});

/// d/dx P(a, x) = x^(a-1) e^(-x) / Gamma(a).
double reg_lower_incomplete_gamma_dx(double a, double x);

/// Error function, odd by construction: erf(-x) == -erf(x) bit for bit.
double erf(double x, const Precision& prec = {});

/// Standard normal CDF. Evaluated through the incomplete gamma kernels so
/// the lower tail keeps full relative accuracy down to the underflow limit.
double normal_cdf(double z, const Precision& prec = {});

/// Modified Bessel function of the first kind, I0 or I1. Power series for
/// small arguments, asymptotic expansion above. Throws std::overflow_error
/// once e^x is no longer representable; use bessel_i_scaled there.
double bessel_i(int order, double x, const Precision& prec = {});

/// Exponentially scaled variant e^(-x) I_v(x); never overflows.
double bessel_i_scaled(int order, double x, const Precision& prec = {});

/// Confluent hypergeometric 1F1(a; 1; x) for a > 0, x >= 0.
double hyp1f1_b1(double a, double x, const Precision& prec = {});

/// Exponentially scaled variant e^(-x) 1F1(a; 1; x). The product-moment
/// formulas multiply 1F1 terms by e^(-K); evaluating the scaled form keeps
/// them finite and accurate for large shape factors.
double hyp1f1_b1_scaled(double a, double x, const Precision& prec = {});

namespace detail {

/// P(a, x) by the ascending series; valid for x < a + 1.
double lower_gamma_series(double a, double x, const Precision& prec);

/// Q(a, x) by the modified Lentz continued fraction; intended for x > a + 1
/// but converges (slowly) for any x > 0 given a large enough term budget.
double upper_gamma_cont_frac(double a, double x, const Precision& prec);

/// Modified Bessel function of the second kind, order zero. Internal helper
/// for the product-density quadrature; not part of the module surface.
double bessel_k0(double x);

}  // namespace detail

}  // namespace irsee
