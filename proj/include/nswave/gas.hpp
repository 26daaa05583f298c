#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "nswave/errors.hpp"

namespace nswave {

/// Ideal polytropic gas in normalized units: P = R rho theta, e = cv theta,
/// s = cv ln(rho^{1-gamma} theta). cv is always derived from R and gamma.
struct GasModel {
  double R = 1.0;
  double gamma = 1.4;
  double mu = 1.0;
  double kappa = 1.0;

  GasModel() = default;
  GasModel(double R_, double gamma_, double mu_, double kappa_)
      : R(R_), gamma(gamma_), mu(mu_), kappa(kappa_) {
    if (!(R > 0.0)) throw ValidationError("GasModel: R must be positive");
    if (!(gamma > 1.0)) throw ValidationError("GasModel: gamma must exceed 1");
    if (!(mu > 0.0)) throw ValidationError("GasModel: mu must be positive");
    if (!(kappa > 0.0)) throw ValidationError("GasModel: kappa must be positive");
  }

  double cv() const { return R / (gamma - 1.0); }
  double cp() const { return cv() + R; }
};

/// Pointwise (rho, u, theta) state. Positivity of rho and theta is enforced
/// at construction; there is no clamping anywhere downstream.
struct FluidState {
  double rho;
  double u;
  double theta;

  FluidState(double rho_, double u_, double theta_) : rho(rho_), u(u_), theta(theta_) {
    if (!(rho > 0.0))
      throw ValidationError("FluidState: rho must be positive, got " + std::to_string(rho));
    if (!(theta > 0.0))
      throw ValidationError("FluidState: theta must be positive, got " + std::to_string(theta));
  }
};

/// Boundary values imposed at x = 0: (u, theta)(t, 0) = (u_minus, theta_minus).
struct BoundaryData {
  double u_minus;
  double theta_minus;

  BoundaryData(double u_, double theta_) : u_minus(u_), theta_minus(theta_) {
    if (!(theta_minus > 0.0)) throw ValidationError("BoundaryData: theta_minus must be positive");
  }
};

/// End states of a scenario: boundary data at x=0, the far-field right state,
/// and (for superpositions) the shared middle state.
struct EndStates {
  BoundaryData left;
  std::optional<FluidState> middle;
  FluidState right;
};

inline double pressure(const GasModel& gas, const FluidState& s) {
  return gas.R * s.rho * s.theta;
}

inline double entropy(const GasModel& gas, const FluidState& s) {
  return gas.cv() * ((1.0 - gas.gamma) * std::log(s.rho) + std::log(s.theta));
}

inline double sound_speed(const GasModel& gas, double theta) {
  return std::sqrt(gas.R * gas.gamma * theta);
}

/// 3-characteristic speed u + sqrt(R gamma theta).
inline double lambda3(const GasModel& gas, const FluidState& s) {
  return s.u + sound_speed(gas, s.theta);
}

/// |u| / sqrt(R gamma theta); classifies the stationary problem at infinity.
inline double mach_at_infinity(const GasModel& gas, const FluidState& s) {
  return std::abs(s.u) / sound_speed(gas, s.theta);
}

inline double specific_internal_energy(const GasModel& gas, const FluidState& s) {
  return gas.cv() * s.theta;
}

/// E = e + u^2/2.
inline double specific_total_energy(const GasModel& gas, const FluidState& s) {
  return gas.cv() * s.theta + 0.5 * s.u * s.u;
}

}  // namespace nswave
