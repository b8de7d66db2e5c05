#pragma once

// Jump conditions across a moving surface Sigma with normal form
// N* = (-D_n, n*). Brackets denote [q] = q_down - q_up; n points from the
// upstream side (u_up > 0) to the downstream side.
//
// Two surface terms come out of the two ways of varying the action:
//
//   space-time   N*[T]                 = (-[D_n p + (e+p) u], [rho u v* + p n*])
//   reference    N0*[T0] = -f [v*F + m w*]
//
// The first vanishes exactly on Rankine-Hugoniot data. The second only
// enforces [v] = [u] n and [u^2/2 + h] = 0; together with the geometric mass
// condition [rho u] = 0 it leaves [p + rho u^2] free.

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "rhkit/detail/root_finding.hpp"
#include "rhkit/eos.hpp"
#include "rhkit/error.hpp"
#include "rhkit/kinematics.hpp"
#include "rhkit/linalg.hpp"
#include "rhkit/state.hpp"
#include "rhkit/tensors.hpp"

namespace rhkit {

struct ShockPair {
  FluidState up;
  FluidState down;
  SurfaceFrame frame;
  Mat3 F_up = Mat3::Identity();
  Mat3 F_down = Mat3::Identity();
  double f_ref = 1.0;
  Covec3 w = Covec3::Zero();

  double u_up() const { return relative_velocity(frame, up.v); }
  double u_down() const { return relative_velocity(frame, down.v); }
  Vec3 velocity_jump() const { return down.v - up.v; }
};

/// Fills the kinematic closure from the upstream side: w* = -n*F_up/u_up,
/// F_down = F_up - [v] w*, f = rho_up det F_up.
inline ShockPair make_shock_pair(const FluidState& up, const FluidState& down,
                                 const SurfaceFrame& frame, const Mat3& F_up = Mat3::Identity()) {
  const double u1 = relative_velocity(frame, up.v);
  if (std::abs(u1) < kContactThreshold)
    throw PhysicsError(Errc::ContactSurface, "no mass flux through the surface");
  if (!(up.rho > 0.0) || !(down.rho > 0.0))
    throw PhysicsError(Errc::NonPositiveDensity, "density must be positive");
  ShockPair pair{up, down, frame, F_up, F_up, 0.0, Covec3::Zero()};
  pair.w = w_from_deformation(F_up, u1, frame.n());
  pair.F_down = F_up + jump_deformation(down.v - up.v, -pair.w);
  pair.f_ref = up.rho * F_up.determinant();
  return pair;
}

/// Upstream reference magnitudes used to nondimensionalise residuals.
struct ShockScales {
  double rho = 1.0;
  double c = 1.0;
  double p = 1.0;  // p + p_inf upstream

  static ShockScales upstream(const ShockPair& pair, const Eos& eos) {
    const ThermoPoint th = pair.up.thermo(eos);
    return {pair.up.rho, std::sqrt(th.c2), th.p + eos.p_inf};
  }
};

struct RhResiduals {
  double mass = 0.0;        // [rho u] / (rho1 c1)
  double momentum_n = 0.0;  // [p + rho u^2] / p1
  Vec3 vel = Vec3::Zero();  // ([v] - [u] n) / c1
  double energy = 0.0;      // [u^2/2 + h] / c1^2

  double norm() const {
    return std::sqrt(mass * mass + momentum_n * momentum_n + vel.squaredNorm() + energy * energy);
  }
};

inline RhResiduals rh_residuals(const ShockPair& pair, const Eos& eos) {
  const double u1 = pair.u_up();
  const double u2 = pair.u_down();
  if (std::abs(u1) < kContactThreshold)
    throw PhysicsError(Errc::ContactSurface, "energy jump condition requires u != 0");
  const ThermoPoint t1 = pair.up.thermo(eos);
  const ThermoPoint t2 = pair.down.thermo(eos);
  const ShockScales sc = ShockScales::upstream(pair, eos);
  const double r1 = pair.up.rho;
  const double r2 = pair.down.rho;

  RhResiduals r;
  r.mass = (r2 * u2 - r1 * u1) / (sc.rho * sc.c);
  r.momentum_n = ((t2.p + r2 * u2 * u2) - (t1.p + r1 * u1 * u1)) / sc.p;
  r.vel = (pair.velocity_jump() - (u2 - u1) * pair.frame.n()) / sc.c;
  r.energy = ((0.5 * u2 * u2 + t2.h) - (0.5 * u1 * u1 + t1.h)) / (sc.c * sc.c);
  return r;
}

/// N*[T], the surface term of the space-time variation.
inline Covec4 spacetime_surface_term(const ShockPair& pair, const Eos& eos) {
  const SpaceTimeTensor T1 = energy_momentum_T(pair.up, eos);
  const SpaceTimeTensor T2 = energy_momentum_T(pair.down, eos);
  return pair.frame.normal_form() * (T2.entries - T1.entries);
}

/// The non-trivial row of N0*[T0] = I*[T0], i.e. -f [v*F + m w*].
inline Covec3 reference_surface_term(const ShockPair& pair, const Eos& eos) {
  if (std::abs(pair.u_up()) < kContactThreshold)
    throw PhysicsError(Errc::ContactSurface, "w is undefined on a contact surface");
  const SpaceTimeTensor T1 = reference_tensor_T0(pair.up, pair.F_up, 1.0, pair.w, pair.f_ref, eos);
  const SpaceTimeTensor T2 = reference_tensor_T0(pair.down, pair.F_down, 1.0, pair.w, pair.f_ref, eos);
  return T2.time_space() - T1.time_space();
}

/// ||N*[T]|| with the energy slot scaled by rho1 c1^3 and momentum by rho1 c1^2.
inline double spacetime_term_norm(const ShockPair& pair, const Eos& eos) {
  const ShockScales sc = ShockScales::upstream(pair, eos);
  Covec4 t = spacetime_surface_term(pair, eos);
  t(0) /= sc.rho * sc.c * sc.c * sc.c;
  t.tail<3>() /= sc.rho * sc.c * sc.c;
  return t.norm();
}

/// ||-f [v*F + m w*] F_up^-1|| / (f c1); independent of the reference configuration.
inline double reference_term_norm(const ShockPair& pair, const Eos& eos) {
  const ShockScales sc = ShockScales::upstream(pair, eos);
  const Covec3 t = reference_surface_term(pair, eos) * pair.F_up.inverse();
  return t.norm() / (std::abs(pair.f_ref) * sc.c);
}

struct ClosureResiduals {
  double w_consistency = 0.0;  // ||n*F_up/u_up - n*F_down/u_down||
  double jump_F = 0.0;         // ||[F] + [v] w*||
  double reference_density = 0.0;  // |rho_down det F_down - f| / f

  double max() const { return std::max({w_consistency, jump_F, reference_density}); }
};

inline ClosureResiduals closure_residuals(const ShockPair& pair) {
  const Vec3& n = pair.frame.n();
  ClosureResiduals c;
  c.w_consistency =
      (n.transpose() * pair.F_up / pair.u_up() - n.transpose() * pair.F_down / pair.u_down()).norm();
  c.jump_F = ((pair.F_down - pair.F_up) + pair.velocity_jump() * pair.w).norm();
  c.reference_density = std::abs(pair.down.rho * pair.F_down.determinant() - pair.f_ref) / std::abs(pair.f_ref);
  return c;
}

// ---------------------------------------------------------------------------
// Downstream solving

struct MachNumber {
  double value;
};
struct DownPressure {
  double value;
};
struct DownDensity {
  double value;
};
using ShockStrength = std::variant<MachNumber, DownPressure, DownDensity>;

namespace detail {

// Downstream data on the Hugoniot: density, pressure and the relative
// normal velocity entering the shock.
struct HugoniotPoint {
  double rho2;
  double p2;
  double u1;
};

inline HugoniotPoint hugoniot_from_mach(const FluidState& up, const Eos& eos, double mach) {
  if (!(mach > 1.0)) throw PhysicsError(Errc::NotSupersonic, "upstream Mach number must exceed 1");
  const ThermoPoint t1 = up.thermo(eos);
  const double rho1 = up.rho;
  const double u1 = mach * std::sqrt(t1.c2);
  const double mflux2 = rho1 * u1 * u1;
  // Energy residual of the Rayleigh line divided by its trivial root at r = 1.
  auto reduced = [&](double r) {
    const double q = 1.0 - 1.0 / r;
    const double p2 = t1.p + mflux2 * q;
    const double dh = enthalpy_from_pressure(eos, rho1 * r, p2) - t1.h;
    return dh / q - 0.5 * u1 * u1 * (1.0 + 1.0 / r);
  };
  const double rmax = eos.max_compression();
  double delta = 1e-3 * (rmax - 1.0);
  while (delta > 1e-14 && !(reduced(1.0 + delta) > 0.0)) delta *= 0.1;
  const double lo = 1.0 + delta;
  const double hi = rmax * (1.0 - 1e-12);
  const double r = bisect_then_newton(reduced, lo, hi).x;
  return {rho1 * r, t1.p + mflux2 * (1.0 - 1.0 / r), u1};
}

// h(rho2, p2) - h1 - (p2 - p1)(1/rho1 + 1/rho2)/2
inline double hugoniot_function(const Eos& eos, double rho1, const ThermoPoint& t1, double rho2, double p2) {
  return enthalpy_from_pressure(eos, rho2, p2) - t1.h - 0.5 * (p2 - t1.p) * (1.0 / rho1 + 1.0 / rho2);
}

inline double inflow_speed(double rho1, double p1, double rho2, double p2) {
  return std::sqrt((p2 - p1) / (rho1 * (1.0 - rho1 / rho2)));
}

inline HugoniotPoint hugoniot_from_pressure(const FluidState& up, const Eos& eos, double p2) {
  const ThermoPoint t1 = up.thermo(eos);
  if (p2 < t1.p) throw PhysicsError(Errc::ExpansionShockRejected, "downstream pressure below upstream");
  const double rho1 = up.rho;
  if (p2 == t1.p) return {rho1, p2, std::sqrt(t1.c2)};
  auto hg = [&](double r) { return hugoniot_function(eos, rho1, t1, rho1 * r, p2); };
  const double r = bisect_then_newton(hg, 1.0, eos.max_compression() * (1.0 - 1e-12)).x;
  return {rho1 * r, p2, inflow_speed(rho1, t1.p, rho1 * r, p2)};
}

inline HugoniotPoint hugoniot_from_density(const FluidState& up, const Eos& eos, double rho2) {
  const ThermoPoint t1 = up.thermo(eos);
  const double rho1 = up.rho;
  if (rho2 < rho1) throw PhysicsError(Errc::ExpansionShockRejected, "downstream density below upstream");
  if (rho2 == rho1) return {rho1, t1.p, std::sqrt(t1.c2)};
  if (!(rho2 < rho1 * eos.max_compression() * (1.0 - 1e-12)))
    throw PhysicsError(Errc::RootNotBracketed, "density ratio beyond the strong-shock limit");
  auto hg = [&](double p2) { return hugoniot_function(eos, rho1, t1, rho2, p2); };
  const double scale = t1.p + eos.p_inf;
  double hi = t1.p + scale;
  int grow = 0;
  while (!(hg(hi) > 0.0)) {
    hi = t1.p + (hi - t1.p) * 2.0;
    if (++grow > 2000 || !std::isfinite(hi))
      throw PhysicsError(Errc::RootNotBracketed, "could not bracket the downstream pressure");
  }
  const double p2 = bisect_then_newton(hg, t1.p, hi).x;
  return {rho2, p2, inflow_speed(rho1, t1.p, rho2, p2)};
}

}  // namespace detail

struct LaxReport {
  bool admissible = false;
  bool is_shock = false;
  double u_up = 0.0;
  double c_up = 0.0;
  double u_down = 0.0;
  double c_down = 0.0;
  double entropy_jump = 0.0;
  std::string verdict;
};

/// Lax's compressive-shock test u1 > c1 and 0 < u2 < c2. The entropy jump
/// is reported alongside but does not enter the verdict.
inline LaxReport lax_admissible(const ShockPair& pair, const Eos& eos) {
  LaxReport rep;
  const ThermoPoint t1 = pair.up.thermo(eos);
  const ThermoPoint t2 = pair.down.thermo(eos);
  rep.u_up = pair.u_up();
  rep.u_down = pair.u_down();
  rep.c_up = std::sqrt(t1.c2);
  rep.c_down = std::sqrt(t2.c2);
  rep.entropy_jump = pair.down.s - pair.up.s;

  const double jump = std::abs(pair.down.rho - pair.up.rho) / pair.up.rho +
                      pair.velocity_jump().norm() / rep.c_up + std::abs(rep.entropy_jump) / eos.c_v;
  if (std::abs(rep.u_up) < kContactThreshold) {
    rep.verdict = "contact surface";
  } else if (jump < 1e-12) {
    rep.verdict = "not a shock";
  } else {
    rep.is_shock = true;
    const bool supersonic_in = rep.u_up > rep.c_up;
    const bool subsonic_out = rep.u_down > 0.0 && rep.u_down < rep.c_down;
    rep.admissible = supersonic_in && subsonic_out;
    if (rep.admissible)
      rep.verdict = "admissible";
    else if (pair.down.rho < pair.up.rho)
      rep.verdict = "expansion shock";
    else
      rep.verdict = supersonic_in ? "downstream not subsonic" : "upstream not supersonic";
  }
  return rep;
}

/// Downstream state reached from `up` through a shock of the given strength.
/// The surface speed is an output: the returned frame keeps n and carries
/// D_n = n.v_up - u_up. Tangential velocity is carried over unchanged and
/// the closure uses F_up = I.
inline ShockPair solve_downstream(const FluidState& up, const Eos& eos, const SurfaceFrame& frame,
                                  const ShockStrength& strength) {
  const detail::HugoniotPoint hp = std::visit(
      [&](const auto& s) -> detail::HugoniotPoint {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, MachNumber>)
          return detail::hugoniot_from_mach(up, eos, s.value);
        else if constexpr (std::is_same_v<S, DownPressure>)
          return detail::hugoniot_from_pressure(up, eos, s.value);
        else
          return detail::hugoniot_from_density(up, eos, s.value);
      },
      strength);

  const Vec3& n = frame.n();
  const double u1 = hp.u1;
  const double u2 = up.rho * u1 / hp.rho2;
  FluidState down;
  down.rho = hp.rho2;
  down.v = up.v + (u2 - u1) * n;
  down.s = entropy_from_pressure(eos, hp.rho2, hp.p2);
  down.omega = up.omega;
  if (hp.rho2 == up.rho) down.s = up.s;

  const SurfaceFrame shock_frame(n, n.dot(up.v) - u1);
  ShockPair pair = make_shock_pair(up, down, shock_frame);
  const LaxReport lax = lax_admissible(pair, eos);
  if (lax.is_shock && !lax.admissible)
    throw PhysicsError(Errc::ExpansionShockRejected, "solved pair fails the compressive-shock test");
  return pair;
}

struct HugoniotSample {
  double rho2;
  double p2;
  double u2;  // downstream relative normal velocity
  double s2;
  double D_n;
};

/// Samples the Hugoniot locus of `up` at the given density ratios rho2/rho1.
inline std::vector<HugoniotSample> hugoniot_locus(const FluidState& up, const Eos& eos,
                                                  const SurfaceFrame& frame,
                                                  const std::vector<double>& density_ratios) {
  std::vector<HugoniotSample> out;
  out.reserve(density_ratios.size());
  const double rmax = eos.max_compression();
  for (double ratio : density_ratios) {
    if (!(ratio > 1.0) || !(ratio < rmax * (1.0 - 1e-12)))
      throw PhysicsError(Errc::RatioOutOfRange, "density ratio must lie in (1, (gamma+1)/(gamma-1))");
    const ShockPair pair = solve_downstream(up, eos, frame, DownDensity{ratio * up.rho});
    out.push_back({pair.down.rho, pressure(eos, pair.down.rho, pair.down.s), pair.u_down(), pair.down.s,
                   pair.frame.D_n()});
  }
  return out;
}

/// Downstream state satisfying [rho u] = 0, [v] = [u] n and [u^2/2 + h] = 0
/// exactly, with the normal-momentum condition left free. Uses the surface
/// speed of `frame`.
inline ShockPair construct_crh2_pair(const FluidState& up, const Eos& eos, const SurfaceFrame& frame,
                                     double rho2) {
  detail::require_density(rho2);
  const Vec3& n = frame.n();
  const double u1 = relative_velocity(frame, up.v);
  if (std::abs(u1) < kContactThreshold)
    throw PhysicsError(Errc::ContactSurface, "construction needs a non-zero mass flux");
  const ThermoPoint t1 = up.thermo(eos);
  const double u2 = up.rho * u1 / rho2;
  const double h2 = t1.h + 0.5 * (u1 * u1 - u2 * u2);

  FluidState down;
  down.rho = rho2;
  down.v = up.v + (u2 - u1) * n;
  down.s = rho2 == up.rho ? up.s : entropy_from_enthalpy(eos, rho2, h2);
  down.omega = up.omega;
  return make_shock_pair(up, down, frame);
}

struct DetJumpResiduals {
  double rank_one_lemma = 0.0;  // |det(1 + [v] n0'* F1^-1) - (1 + n0'* F1^-1 [v])|
  double det_ratio = 0.0;       // |det F2 / det F1 - u2 / u1|
};

/// |det(1 + K L*) - (1 + L*K)|.
inline double rank_one_det_residual(const Vec3& K, const Covec3& L) {
  return std::abs((Mat3::Identity() + K * L).determinant() - (1.0 + L.dot(K.transpose())));
}

/// Certifies the geometric mass condition: with F2 = F1 + [v] n0'*, the
/// determinant ratio det F2 / det F1 must equal u2 / u1.
inline DetJumpResiduals det_jump_identity(const Mat3& F1, const Vec3& dv, const Covec3& n0p, double u1,
                                          double u2) {
  const double det1 = F1.determinant();
  if (det1 == 0.0 || !std::isfinite(det1)) throw PhysicsError(Errc::SingularF, "F1 is singular");
  const Covec3 L = n0p * F1.inverse();  // equals n*/u1 on consistent data
  DetJumpResiduals r;
  r.rank_one_lemma = rank_one_det_residual(dv, L);
  const Mat3 F2 = F1 + jump_deformation(dv, n0p);
  r.det_ratio = std::abs(F2.determinant() / det1 - u2 / u1);
  return r;
}

inline DetJumpResiduals det_jump_identity(const ShockPair& pair) {
  return det_jump_identity(pair.F_up, pair.velocity_jump(), -pair.w, pair.u_up(), pair.u_down());
}

struct ContactReport {
  double pressure_jump = 0.0;         // [p]
  double normal_velocity_jump = 0.0;  // [n.v]
  double density_jump = 0.0;          // [rho], free
  double tangential_jump = 0.0;       // ||[v_tg]||, free
  bool no_mass_flux = false;          // |u| below threshold on both sides
};

/// Classical contact conditions [p] = 0, [n.v] = 0 for a surface without mass
/// flux. Informational only: such surfaces are outside the shock relations.
inline ContactReport contact_conditions(const FluidState& left, const FluidState& right,
                                        const SurfaceFrame& frame, const Eos& eos) {
  const Vec3& n = frame.n();
  const Vec3 dv = right.v - left.v;
  ContactReport c;
  c.pressure_jump = pressure(eos, right.rho, right.s) - pressure(eos, left.rho, left.s);
  c.normal_velocity_jump = n.dot(dv);
  c.density_jump = right.rho - left.rho;
  c.tangential_jump = (dv - n.dot(dv) * n).norm();
  c.no_mass_flux = std::abs(relative_velocity(frame, left.v)) < kContactThreshold &&
                   std::abs(relative_velocity(frame, right.v)) < kContactThreshold;
  return c;
}

}  // namespace rhkit
