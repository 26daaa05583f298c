#pragma once

#include <cmath>
#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "nswave/errors.hpp"

namespace nswave {

/// 1/q!, the constant k_q normalizing k_q * integral_0^inf z^q e^-z dz = 1.
/// Plain products up to q = 170 (exact in double through q = 18), log-space
/// beyond to stay overflow-safe.
inline double burgers_normalization(int q) {
  if (q < 0) throw ValidationError("burgers_normalization: q must be a non-negative integer");
  if (q <= 170) {
    double fact = 1.0;
    for (int k = 2; k <= q; ++k) fact *= k;
    return 1.0 / fact;
  }
  return std::exp(-std::lgamma(static_cast<double>(q) + 1.0));
}

/// Regularized lower incomplete gamma P(q+1, x) for integer q >= 0.
/// Series branch for small x keeps relative accuracy where P is tiny; the
/// complement (a finite sum for integer order) is used elsewhere.
inline double gamma_p_integer(int q, double x) {
  if (q < 0) throw ValidationError("gamma_p_integer: q must be a non-negative integer");
  if (x <= 0.0) return 0.0;
  const double a = q + 1.0;
  if (x < a + 1.0) {
    // P(a,x) = x^a e^-x / Gamma(a+1) * sum_{n>=0} x^n / prod_{j=1..n}(a+j)
    double term = std::exp(a * std::log(x) - x - std::lgamma(a + 1.0));
    double sum = term;
    for (int n = 1; n < 10000; ++n) {
      term *= x / (a + n);
      sum += term;
      if (term < sum * std::numeric_limits<double>::epsilon()) break;
    }
    return sum;
  }
  // Q(q+1,x) = e^-x sum_{k=0}^{q} x^k/k!, exact finite sum; P = 1 - Q.
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= q; ++k) {
    term *= x / k;
    sum += term;
  }
  return 1.0 - std::exp(-x) * sum;
}

/// Initial data of the smoothing Cauchy problem: monotone transition from
/// w_minus to w_plus with tail weight z^q e^-z.
struct BurgersProfile {
  double w_minus;
  double w_plus;
  int q = 16;

  BurgersProfile(double w_minus_, double w_plus_, int q_ = 16)
      : w_minus(w_minus_), w_plus(w_plus_), q(q_) {
    if (!(w_minus <= w_plus))
      throw ValidationError("BurgersProfile: requires w_minus <= w_plus");
    if (q < 16) throw ValidationError("BurgersProfile: requires integer q >= 16");
  }

  double strength() const { return w_plus - w_minus; }
};

/// w0(x) = w_- + (w_+ - w_-) P(q+1, max(x,0)).
inline double initial_profile(const BurgersProfile& p, double x) {
  if (x <= 0.0) return p.w_minus;
  return p.w_minus + p.strength() * gamma_p_integer(p.q, x);
}

/// w0'(x) = (w_+ - w_-) k_q x^q e^-x for x > 0, zero otherwise.
inline double initial_slope(const BurgersProfile& p, double x) {
  if (x <= 0.0) return 0.0;
  const double log_density = p.q * std::log(x) - x - std::lgamma(p.q + 1.0);
  return p.strength() * std::exp(log_density);
}

struct BurgersValue {
  double w;
  double w_x;
};

/// Exact smooth solution of w_t + w w_x = 0 with initial_profile data, by the
/// method of characteristics: solves x = x0 + t w0(x0) for the unique foot
/// point (the map is strictly increasing since w0' >= 0), then
/// w = w0(x0), w_x = w0'(x0) / (1 + t w0'(x0)).
inline BurgersValue exact_solution(const BurgersProfile& p, double t, double x) {
  if (!(t >= 0.0)) throw ValidationError("exact_solution: requires t >= 0");
  if (p.strength() == 0.0) return {p.w_minus, 0.0};
  if (t == 0.0) return {initial_profile(p, x), initial_slope(p, x)};

  double lo = x - t * p.w_plus;
  double hi = x - t * p.w_minus;
  const auto residual = [&](double x0) { return x0 + t * initial_profile(p, x0) - x; };
  if (residual(lo) > 0.0 || residual(hi) < 0.0)
    throw std::logic_error("exact_solution: characteristic bracket failed");

  for (int it = 0; it < 200 && hi - lo > 1e-8; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (residual(mid) <= 0.0)
      lo = mid;
    else
      hi = mid;
  }

  double x0 = 0.5 * (lo + hi);
  const double atol = 1e-12 * std::max(1.0, std::abs(x));
  for (int it = 0; it < 4; ++it) {
    const double res = residual(x0);
    if (std::abs(res) <= atol) break;
    x0 -= res / (1.0 + t * initial_slope(p, x0));
  }
  if (std::abs(residual(x0)) > atol)
    throw std::logic_error("exact_solution: characteristic root did not polish to tolerance");

  const double slope0 = initial_slope(p, x0);
  return {initial_profile(p, x0), slope0 / (1.0 + t * slope0)};
}

/// Continuous weak solution w^R of the Riemann problem (the centered fan).
inline double riemann_solution(double w_minus, double w_plus, double t, double x) {
  if (!(t > 0.0)) throw ValidationError("riemann_solution: requires t > 0");
  if (!(w_minus <= w_plus)) throw ValidationError("riemann_solution: requires w_minus <= w_plus");
  if (x <= w_minus * t) return w_minus;
  if (x >= w_plus * t) return w_plus;
  return x / t;
}

}  // namespace nswave
