#pragma once

// Adaptive Gauss-Kronrod (G7, K15) integration on a finite interval.
// Header-only so callers can pass arbitrary callables without type erasure.

#include <cmath>
#include <utility>

#include "irsee/errors.hpp"

namespace irsee {

namespace detail {

// K15 abscissas / weights and the embedded G7 weights (QUADPACK dqk15).
inline constexpr double kKronrodX[8] = {
    0.991455371120812639206854697526, 0.949107912342758524526189684048,
    0.864864423359769072789712788641, 0.741531185599394439863864773281,
    0.586087235467691130294144838259, 0.405845151377397166906606412077,
    0.207784955007898467600689403773, 0.0};
inline constexpr double kKronrodW[8] = {
    0.022935322010529224963732008059, 0.063092092629978553290700663189,
    0.104790010322250183839876322542, 0.140653259715525918745189590510,
    0.169004726639267902826583426599, 0.190350578064785409913256402421,
    0.204432940075298892414161999234, 0.209482141084727828012999174892};
inline constexpr double kGaussW[4] = {
    0.129484966168869693270611432679, 0.279705391489276667901467771424,
    0.381830050505118944950369775489, 0.417959183673469387755102040816};

template <class F>
std::pair<double, double> gauss_kronrod_15(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  double kron = kKronrodW[7] * f(c);
  double gauss = kGaussW[3] * f(c);
  for (int i = 0; i < 7; ++i) {
    const double dx = hw * kKronrodX[i];
    const double pair_sum = f(c - dx) + f(c + dx);
    kron += kKronrodW[i] * pair_sum;
    if (i % 2 == 1) gauss += kGaussW[i / 2] * pair_sum;
  }
  kron *= hw;
  gauss *= hw;
  return {kron, std::abs(kron - gauss)};
}

template <class F>
double integrate_rec(F&& f, double a, double b, double tol, int depth) {
  const auto [value, err] = gauss_kronrod_15(f, a, b);
  if (err <= tol || err <= 1e-300) return value;
  if (depth <= 0) {
    throw ConvergenceError("integrate: refinement depth exhausted");
  }
  const double c = 0.5 * (a + b);
  return integrate_rec(f, a, c, 0.5 * tol, depth - 1) +
         integrate_rec(f, c, b, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Integrate f over [a, b] to absolute tolerance abs_tol. Bisects until the
/// local K15-G7 error estimate is met; throws ConvergenceError when 50
/// levels of refinement are not enough.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-11) {
  if (!(a <= b)) throw std::domain_error("integrate: requires a <= b");
  if (a == b) return 0.0;
  return detail::integrate_rec(std::forward<F>(f), a, b, abs_tol, 50);
}

}  // namespace irsee
