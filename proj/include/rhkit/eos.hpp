#pragma once

// Equation-of-state layer. Every thermodynamic quantity derives from the
// specific internal energy alpha(rho, s); the two closed forms share the
// entropy factor A(rho, s) = K rho^gamma exp(s / c_v):
//
//   ideal gas       alpha = A / ((gamma - 1) rho)              p = A
//   stiffened gas   alpha = A / ((gamma - 1) rho) + p_inf/rho  p = A - p_inf
//
// so that p = rho^2 d(alpha)/d(rho), theta = d(alpha)/ds, h = alpha + p/rho
// hold identically. All quantities are nondimensional.

#include <cmath>
#include <string>

#include "rhkit/error.hpp"

namespace rhkit {

enum class EosKind { IdealGas, StiffenedGas };

struct Eos {
  EosKind kind = EosKind::IdealGas;
  double gamma = 1.4;
  double c_v = 1.0;
  double K = 1.0;
  double p_inf = 0.0;

  static Eos ideal_gas(double gamma, double c_v = 1.0, double K = 1.0) {
    Eos e{EosKind::IdealGas, gamma, c_v, K, 0.0};
    e.validate();
    return e;
  }

  static Eos stiffened_gas(double gamma, double c_v, double K, double p_inf) {
    Eos e{EosKind::StiffenedGas, gamma, c_v, K, p_inf};
    e.validate();
    return e;
  }

  void validate() const {
    if (!(gamma > 1.0)) throw PhysicsError(Errc::InvalidEos, "gamma must exceed 1");
    if (!(c_v > 0.0)) throw PhysicsError(Errc::InvalidEos, "c_v must be positive");
    if (!(K > 0.0)) throw PhysicsError(Errc::InvalidEos, "K must be positive");
    if (!(p_inf >= 0.0)) throw PhysicsError(Errc::InvalidEos, "p_inf must be non-negative");
    if (kind == EosKind::IdealGas && p_inf != 0.0)
      throw PhysicsError(Errc::InvalidEos, "p_inf is only meaningful for a stiffened gas");
  }

  /// Upper limit of rho2/rho1 across a shock (infinitely strong shock).
  double max_compression() const { return (gamma + 1.0) / (gamma - 1.0); }

  bool operator==(const Eos&) const = default;
};

struct ThermoPoint {
  double alpha;  // specific internal energy
  double p;
  double h;      // specific enthalpy
  double theta;  // temperature
  double c2;     // squared sound speed
};

namespace detail {

inline void require_density(double rho) {
  if (!(rho > 0.0)) throw PhysicsError(Errc::NonPositiveDensity, "density must be positive");
}

// A(rho, s) = K rho^gamma exp(s / c_v) = p + p_inf.
inline double entropy_factor(const Eos& eos, double rho, double s) {
  return eos.K * std::pow(rho, eos.gamma) * std::exp(s / eos.c_v);
}

}  // namespace detail

inline double internal_energy(const Eos& eos, double rho, double s) {
  detail::require_density(rho);
  const double a = detail::entropy_factor(eos, rho, s);
  return a / ((eos.gamma - 1.0) * rho) + eos.p_inf / rho;
}

inline ThermoPoint evaluate(const Eos& eos, double rho, double s) {
  detail::require_density(rho);
  const double g = eos.gamma;
  const double a = detail::entropy_factor(eos, rho, s);
  ThermoPoint t{};
  t.alpha = a / ((g - 1.0) * rho) + eos.p_inf / rho;
  t.p = a - eos.p_inf;
  t.h = t.alpha + t.p / rho;
  t.theta = a / ((g - 1.0) * rho * eos.c_v);
  t.c2 = g * a / rho;
  if (!(t.c2 > 0.0) || !std::isfinite(t.c2))
    throw PhysicsError(Errc::SoundSpeedUndefined, "squared sound speed is not positive");
  return t;
}

inline double pressure(const Eos& eos, double rho, double s) { return evaluate(eos, rho, s).p; }

inline double sound_speed(const Eos& eos, double rho, double s) {
  return std::sqrt(evaluate(eos, rho, s).c2);
}

/// Entropy of the state (rho, p). Requires p + p_inf > 0.
inline double entropy_from_pressure(const Eos& eos, double rho, double p) {
  detail::require_density(rho);
  const double a = p + eos.p_inf;
  if (!(a > 0.0)) throw PhysicsError(Errc::SoundSpeedUndefined, "p + p_inf must be positive");
  return eos.c_v * std::log(a / (eos.K * std::pow(rho, eos.gamma)));
}

/// Density of the isentrope through s at pressure p.
inline double density_from_pressure(const Eos& eos, double p, double s) {
  const double a = p + eos.p_inf;
  if (!(a > 0.0)) throw PhysicsError(Errc::SoundSpeedUndefined, "p + p_inf must be positive");
  return std::pow(a / (eos.K * std::exp(s / eos.c_v)), 1.0 / eos.gamma);
}

/// h(rho, p) = gamma (p + p_inf) / ((gamma - 1) rho) for both closed forms.
inline double enthalpy_from_pressure(const Eos& eos, double rho, double p) {
  detail::require_density(rho);
  return eos.gamma * (p + eos.p_inf) / ((eos.gamma - 1.0) * rho);
}

/// Inverts h = gamma K rho^(gamma-1) exp(s/c_v) / (gamma - 1) for s.
inline double entropy_from_enthalpy(const Eos& eos, double rho, double h) {
  detail::require_density(rho);
  if (!(h > 0.0)) throw PhysicsError(Errc::EnthalpyUnreachable, "required enthalpy is not positive");
  const double g = eos.gamma;
  return eos.c_v * std::log(h * (g - 1.0) / (g * eos.K * std::pow(rho, g - 1.0)));
}

/// |dh - theta ds - dp/rho| over a centred increment (drho, ds) about (rho, s).
/// The centred form makes the residual third order in the increment.
inline double gibbs_residual(const Eos& eos, double rho, double s, double drho, double ds) {
  detail::require_density(rho);
  if (drho == 0.0 && ds == 0.0) return 0.0;
  const ThermoPoint lo = evaluate(eos, rho - 0.5 * drho, s - 0.5 * ds);
  const ThermoPoint hi = evaluate(eos, rho + 0.5 * drho, s + 0.5 * ds);
  const ThermoPoint mid = evaluate(eos, rho, s);
  return std::abs((hi.h - lo.h) - mid.theta * ds - (hi.p - lo.p) / rho);
}

inline std::string to_string(EosKind kind) {
  return kind == EosKind::IdealGas ? "ideal_gas" : "stiffened_gas";
}

}  // namespace rhkit
