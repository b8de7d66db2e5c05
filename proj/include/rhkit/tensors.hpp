#pragma once

// Energy-momentum tensor T, reference tensor T0 and the bulk residuals of the
// conservative fluid equations.
//
//        | -e              rho v*         |          | 0   -v*F - m w* |
//   T  = |                                |   T0 = f |                 |
//        | -(e+p) v        rho v v* + p 1 |          | 0    m mu 1     |
//
// with e = rho (v^2/2 + alpha + Omega) and m = v^2/2 - h - Omega. The
// additive 1/2 of the space-time kinetic term is dropped from m; it cancels
// in every jump.

#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "rhkit/eos.hpp"
#include "rhkit/error.hpp"
#include "rhkit/kinematics.hpp"
#include "rhkit/linalg.hpp"
#include "rhkit/state.hpp"

namespace rhkit {

inline constexpr double kDefaultStep = 1e-4;

/// 4x4 tensor with (time, space) block structure. Row/column 0 is time.
struct SpaceTimeTensor {
  Mat4 entries = Mat4::Zero();

  double time_time() const { return entries(0, 0); }
  Covec3 time_space() const { return entries.block<1, 3>(0, 1); }
  Vec3 space_time() const { return entries.block<3, 1>(1, 0); }
  Mat3 space_space() const { return entries.block<3, 3>(1, 1); }

  double operator()(int row, int col) const { return entries(row, col); }
};

/// m = dL/drho = v^2/2 - h - Omega.
inline double specific_m(const FluidState& state, const Eos& eos) {
  return 0.5 * state.v.squaredNorm() - state.thermo(eos).h - state.omega;
}

inline double energy_density(const FluidState& state, const Eos& eos) {
  const ThermoPoint th = state.thermo(eos);
  return state.rho * (0.5 * state.v.squaredNorm() + th.alpha + state.omega);
}

inline SpaceTimeTensor energy_momentum_T(const FluidState& state, const Eos& eos) {
  const ThermoPoint th = state.thermo(eos);
  const double rho = state.rho;
  const Vec3& v = state.v;
  const double e = rho * (0.5 * v.squaredNorm() + th.alpha + state.omega);
  SpaceTimeTensor T;
  T.entries(0, 0) = -e;
  T.entries.block<1, 3>(0, 1) = rho * v.transpose();
  T.entries.block<3, 1>(1, 0) = -(e + th.p) * v;
  T.entries.block<3, 3>(1, 1) = rho * v * v.transpose() + th.p * Mat3::Identity();
  return T;
}

/// Conserved reference density f = rho det(B) / mu.
inline double reference_density(double rho, const Mat4& B4) {
  if (B4(0, 0) == 0.0) throw PhysicsError(Errc::DegenerateParametrization, "dt/dlambda vanishes");
  return rho * B4.determinant() / B4(0, 0);
}

inline SpaceTimeTensor reference_tensor_T0(const FluidState& state, const Mat3& F, double mu,
                                           const Covec3& w, double f, const Eos& eos) {
  if (!(f > 0.0))
    throw PhysicsError(Errc::NonPositiveReferenceDensity, "reference density must be positive");
  const double m = specific_m(state, eos);
  SpaceTimeTensor T0;
  T0.entries.block<1, 3>(0, 1) = f * (-(state.v.transpose() * F) - m * w);
  T0.entries.block<3, 3>(1, 1) = f * m * mu * Mat3::Identity();
  return T0;
}

/// F* = -rho dOmega/dz, with grad_omega = (dOmega/dt, dOmega/dx).
inline Covec4 body_force(const FluidState& state, const Covec4& grad_omega) {
  return -state.rho * grad_omega;
}

/// Axis-aligned space-time box on which a field may be evaluated.
struct FieldDomain {
  double t_min = -std::numeric_limits<double>::infinity();
  double t_max = std::numeric_limits<double>::infinity();
  Vec3 x_min = Vec3::Constant(-std::numeric_limits<double>::infinity());
  Vec3 x_max = Vec3::Constant(std::numeric_limits<double>::infinity());

  bool contains(double t, const Vec3& x) const {
    return t >= t_min && t <= t_max && (x.array() >= x_min.array()).all() &&
           (x.array() <= x_max.array()).all();
  }
};

/// A fluid field (t, x) -> (rho, v, s, Omega). The potential gradient
/// dOmega/dz may be supplied analytically; otherwise it is differenced.
struct SmoothField {
  std::function<FluidState(double, const Vec3&)> state;
  std::function<Covec4(double, const Vec3&)> potential_gradient;
  FieldDomain domain;
};

struct MotionResiduals {
  double energy = 0.0;                // de/dt + div((e+p)v) - rho dOmega/dt
  Covec3 momentum = Covec3::Zero();   // d(rho v*)/dt + div(rho v v* + p 1) + rho dOmega/dx
  Vec3 thermo = Vec3::Zero();         // a + grad(h + Omega) - theta grad s
  double entropy = 0.0;               // ds/dt + v.grad s
  double mass = 0.0;                  // drho/dt + div(rho v)
};

namespace detail {

// Values sampled on the 2nd-order central stencil: index 0 is the centre,
// 1 + 2a and 2 + 2a are the minus/plus neighbours along axis a (a = 0 is t).
template <class Sample>
struct Stencil {
  std::array<Sample, 9> at;
  const Sample& centre() const { return at[0]; }
  const Sample& minus(int axis) const { return at[1 + 2 * axis]; }
  const Sample& plus(int axis) const { return at[2 + 2 * axis]; }
};

struct PointSample {
  FluidState state;
  ThermoPoint thermo;
  SpaceTimeTensor T;
  double e;
};

inline Stencil<PointSample> sample_stencil(const SmoothField& field, const Eos& eos, double t,
                                           const Vec3& x, double h) {
  if (!(h > 0.0)) throw PhysicsError(Errc::StencilOutOfDomain, "step must be positive");
  Stencil<PointSample> st;
  for (int k = 0; k < 9; ++k) {
    double tk = t;
    Vec3 xk = x;
    if (k > 0) {
      const int axis = (k - 1) / 2;
      const double sign = (k % 2 == 1) ? -1.0 : 1.0;
      if (axis == 0)
        tk += sign * h;
      else
        xk(axis - 1) += sign * h;
    }
    if (!field.domain.contains(tk, xk))
      throw PhysicsError(Errc::StencilOutOfDomain, "stencil leaves the field domain");
    PointSample& ps = st.at[k];
    ps.state = field.state(tk, xk);
    ps.thermo = ps.state.thermo(eos);
    ps.T = energy_momentum_T(ps.state, eos);
    ps.e = -ps.T.time_time();
  }
  return st;
}

template <class Fn>
double central(const Stencil<PointSample>& st, int axis, double h, Fn&& fn) {
  return (fn(st.plus(axis)) - fn(st.minus(axis))) / (2.0 * h);
}

inline Covec4 potential_gradient(const SmoothField& field, const Stencil<PointSample>& st,
                                 double t, const Vec3& x, double h) {
  if (field.potential_gradient) return field.potential_gradient(t, x);
  Covec4 g;
  for (int a = 0; a < 4; ++a) g(a) = central(st, a, h, [](const PointSample& p) { return p.state.omega; });
  return g;
}

}  // namespace detail

/// Bulk residuals of the energy, momentum, thermodynamic-form and entropy
/// equations at (t, x) by second-order central differences of step h.
inline MotionResiduals motion_residuals(const SmoothField& field, const Eos& eos, double t,
                                        const Vec3& x, double h = kDefaultStep) {
  const auto st = detail::sample_stencil(field, eos, t, x, h);
  using detail::central;
  using detail::PointSample;
  const PointSample& c = st.centre();
  const Covec4 dOmega = detail::potential_gradient(field, st, t, x, h);

  MotionResiduals r;
  r.energy = central(st, 0, h, [](const PointSample& p) { return p.e; });
  r.mass = central(st, 0, h, [](const PointSample& p) { return p.state.rho; });
  r.entropy = central(st, 0, h, [](const PointSample& p) { return p.state.s; });
  for (int j = 0; j < 3; ++j)
    r.momentum(j) = central(st, 0, h, [j](const PointSample& p) { return p.state.rho * p.state.v(j); });

  Vec3 grad_h_omega = Vec3::Zero();
  Vec3 dv_dt;
  for (int j = 0; j < 3; ++j) dv_dt(j) = central(st, 0, h, [j](const PointSample& p) { return p.state.v(j); });
  Vec3 convective = Vec3::Zero();

  for (int i = 0; i < 3; ++i) {
    const int axis = i + 1;
    r.energy += central(st, axis, h, [i](const PointSample& p) {
      return (p.e + p.thermo.p) * p.state.v(i);
    });
    r.mass += central(st, axis, h, [i](const PointSample& p) { return p.state.rho * p.state.v(i); });
    const double ds = central(st, axis, h, [](const PointSample& p) { return p.state.s; });
    r.entropy += c.state.v(i) * ds;
    for (int j = 0; j < 3; ++j) {
      r.momentum(j) += central(st, axis, h, [i, j](const PointSample& p) {
        return p.state.rho * p.state.v(i) * p.state.v(j) + (i == j ? p.thermo.p : 0.0);
      });
      convective(j) += c.state.v(i) * central(st, axis, h, [j](const PointSample& p) { return p.state.v(j); });
    }
    grad_h_omega(i) = central(st, axis, h, [](const PointSample& p) { return p.thermo.h; }) + dOmega(axis);
    r.thermo(i) = -c.thermo.theta * ds;
  }
  r.energy -= c.state.rho * dOmega(0);
  r.momentum += c.state.rho * dOmega.tail<3>();
  r.thermo += dv_dt + convective + grad_h_omega;
  return r;
}

/// F* - Div T at (t, x), with (Div T)_j = sum_a d T^a_j / dz^a. Its time
/// slot reproduces the energy residual and its space slots the negated
/// momentum residual.
inline Covec4 div_T_residual(const SmoothField& field, const Eos& eos, double t, const Vec3& x,
                             double h = kDefaultStep) {
  const auto st = detail::sample_stencil(field, eos, t, x, h);
  const Covec4 dOmega = detail::potential_gradient(field, st, t, x, h);
  using detail::PointSample;
  Covec4 divT = Covec4::Zero();
  for (int j = 0; j < 4; ++j)
    for (int a = 0; a < 4; ++a)
      divT(j) += detail::central(st, a, h, [a, j](const PointSample& p) { return p.T(a, j); });
  return body_force(st.centre().state, dOmega) - divT;
}

}  // namespace rhkit
