#pragma once

// Exact solver for the one-dimensional Riemann problem of an ideal gas.
// Shock branches of the pressure function are evaluated through the shock
// module's Hugoniot relations rather than a separate closed form.

#include <cmath>
#include <vector>

#include "rhkit/detail/root_finding.hpp"
#include "rhkit/eos.hpp"
#include "rhkit/error.hpp"
#include "rhkit/shock.hpp"
#include "rhkit/state.hpp"

namespace rhkit {

enum class WaveKind { Shock, Rarefaction };

inline const char* to_string(WaveKind k) { return k == WaveKind::Shock ? "shock" : "rarefaction"; }

struct RiemannSolution {
  double p_star = 0.0;
  double u_star = 0.0;
  WaveKind wave_left = WaveKind::Rarefaction;
  WaveKind wave_right = WaveKind::Rarefaction;
  double rho_star_left = 0.0;
  double rho_star_right = 0.0;
  // Head and tail speeds; both equal the shock speed for a shock.
  double left_head = 0.0, left_tail = 0.0;
  double right_head = 0.0, right_tail = 0.0;
  int iterations = 0;
  double pressure_function_residual = 0.0;

  FluidState left;
  FluidState right;
  bool solved = false;
};

inline constexpr double kRiemannTolerance = 1e-12;
inline constexpr int kRiemannMaxIterations = 200;

namespace detail {

struct SideWave {
  double f;       // velocity change across the wave
  double rho2;    // density behind the wave
  double inflow;  // relative inflow speed (shock only)
};

inline SideWave side_wave(const FluidState& side, const Eos& eos, double p) {
  const ThermoPoint t = side.thermo(eos);
  const double g = eos.gamma;
  if (p > t.p) {
    const HugoniotPoint hp = hugoniot_from_pressure(side, eos, p);
    const double u2 = side.rho * hp.u1 / hp.rho2;
    return {hp.u1 - u2, hp.rho2, hp.u1};
  }
  const double c = std::sqrt(t.c2);
  return {2.0 * c / (g - 1.0) * (std::pow(p / t.p, (g - 1.0) / (2.0 * g)) - 1.0),
          density_from_pressure(eos, p, side.s), 0.0};
}

inline double isentropic_density(const Eos& eos, double c2, double s) {
  return std::pow(c2 / (eos.gamma * eos.K * std::exp(s / eos.c_v)), 1.0 / (eos.gamma - 1.0));
}

inline bool same_state(const FluidState& a, const FluidState& b) {
  return a.rho == b.rho && a.v == b.v && a.s == b.s && a.omega == b.omega;
}

}  // namespace detail

/// Star-region pressure and velocity. The normal direction is x; transverse
/// velocity components are advected passively.
inline RiemannSolution solve_star(const FluidState& left, const FluidState& right, const Eos& eos) {
  if (eos.kind != EosKind::IdealGas)
    throw PhysicsError(Errc::InvalidEos, "the exact Riemann solver supports the ideal gas only");
  const ThermoPoint tl = left.thermo(eos);
  const ThermoPoint tr = right.thermo(eos);
  const double g = eos.gamma;
  const double cl = std::sqrt(tl.c2);
  const double cr = std::sqrt(tr.c2);
  const double du = right.v.x() - left.v.x();
  if (2.0 * (cl + cr) / (g - 1.0) <= du)
    throw PhysicsError(Errc::VacuumFormation, "initial data generate a vacuum");

  auto pfun = [&](double p) {
    return detail::side_wave(left, eos, p).f + detail::side_wave(right, eos, p).f + du;
  };
  const double lo = 1e-14 * std::min(tl.p, tr.p);
  double hi = std::max(tl.p, tr.p);
  int grow = 0;
  while (pfun(hi) < 0.0) {
    hi *= 2.0;
    if (++grow > kRiemannMaxIterations || !std::isfinite(hi))
      throw PhysicsError(Errc::NoBracket, "could not bracket the star pressure");
  }
  const detail::RootResult root = detail::bisection(pfun, lo, hi, kRiemannTolerance, kRiemannMaxIterations);

  RiemannSolution sol;
  sol.left = left;
  sol.right = right;
  sol.p_star = root.x;
  sol.iterations = root.iterations;
  sol.pressure_function_residual = root.fx;

  const detail::SideWave wl = detail::side_wave(left, eos, sol.p_star);
  const detail::SideWave wr = detail::side_wave(right, eos, sol.p_star);
  sol.u_star = 0.5 * (left.v.x() + right.v.x()) + 0.5 * (wr.f - wl.f);
  sol.rho_star_left = wl.rho2;
  sol.rho_star_right = wr.rho2;

  if (sol.p_star > tl.p) {
    sol.wave_left = WaveKind::Shock;
    sol.left_head = sol.left_tail = left.v.x() - wl.inflow;
  } else {
    sol.wave_left = WaveKind::Rarefaction;
    sol.left_head = left.v.x() - cl;
    sol.left_tail = sol.u_star - std::sqrt(g * sol.p_star / sol.rho_star_left);
  }
  if (sol.p_star > tr.p) {
    sol.wave_right = WaveKind::Shock;
    sol.right_head = sol.right_tail = right.v.x() + wr.inflow;
  } else {
    sol.wave_right = WaveKind::Rarefaction;
    sol.right_head = right.v.x() + cr;
    sol.right_tail = sol.u_star + std::sqrt(g * sol.p_star / sol.rho_star_right);
  }
  sol.solved = true;
  return sol;
}

/// Self-similar solution at xi = x / t.
inline FluidState sample(const RiemannSolution& sol, const FluidState& left, const FluidState& right,
                         const Eos& eos, double xi) {
  if (!sol.solved || !detail::same_state(sol.left, left) || !detail::same_state(sol.right, right))
    throw PhysicsError(Errc::UnsolvedInput, "solution was not computed for these states");
  const double g = eos.gamma;
  FluidState out;
  if (xi < sol.u_star) {
    out = left;
    if (xi < sol.left_head) return left;
    if (sol.wave_left == WaveKind::Rarefaction && xi < sol.left_tail) {
      const double cl = sound_speed(eos, left.rho, left.s);
      const double c = 2.0 / (g + 1.0) * (cl + 0.5 * (g - 1.0) * (left.v.x() - xi));
      out.v.x() = 2.0 / (g + 1.0) * (cl + 0.5 * (g - 1.0) * left.v.x() + xi);
      out.rho = detail::isentropic_density(eos, c * c, left.s);
      return out;
    }
    out.rho = sol.rho_star_left;
    out.v.x() = sol.u_star;
    out.s = sol.wave_left == WaveKind::Shock ? entropy_from_pressure(eos, out.rho, sol.p_star) : left.s;
    return out;
  }
  out = right;
  if (xi > sol.right_head) return right;
  if (sol.wave_right == WaveKind::Rarefaction && xi > sol.right_tail) {
    const double cr = sound_speed(eos, right.rho, right.s);
    const double c = 2.0 / (g + 1.0) * (cr - 0.5 * (g - 1.0) * (right.v.x() - xi));
    out.v.x() = 2.0 / (g + 1.0) * (-cr + 0.5 * (g - 1.0) * right.v.x() + xi);
    out.rho = detail::isentropic_density(eos, c * c, right.s);
    return out;
  }
  out.rho = sol.rho_star_right;
  out.v.x() = sol.u_star;
  out.s = sol.wave_right == WaveKind::Shock ? entropy_from_pressure(eos, out.rho, sol.p_star) : right.s;
  return out;
}

/// Upstream/downstream pairs of every shock wave in the solution, oriented so
/// that the upstream side has positive relative velocity.
inline std::vector<ShockPair> shock_pairs(const RiemannSolution& sol, const Eos& eos) {
  std::vector<ShockPair> pairs;
  if (sol.wave_left == WaveKind::Shock) {
    const FluidState star = sample(sol, sol.left, sol.right, eos, 0.5 * (sol.left_tail + sol.u_star));
    pairs.push_back(make_shock_pair(sol.left, star, SurfaceFrame(Vec3::UnitX(), sol.left_head)));
  }
  if (sol.wave_right == WaveKind::Shock) {
    const FluidState star = sample(sol, sol.left, sol.right, eos, 0.5 * (sol.right_tail + sol.u_star));
    pairs.push_back(make_shock_pair(sol.right, star, SurfaceFrame(-Vec3::UnitX(), -sol.right_head)));
  }
  return pairs;
}

}  // namespace rhkit
