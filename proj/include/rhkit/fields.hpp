#pragma once

// Built-in smooth fields for residual checks. Some are exact solutions of the
// conservative fluid equations, others deliberately are not.

#include <cmath>

#include "rhkit/eos.hpp"
#include "rhkit/tensors.hpp"

namespace rhkit::fields {

inline SmoothField constant(const FluidState& state) {
  SmoothField f;
  f.state = [state](double, const Vec3&) { return state; };
  f.potential_gradient = [](double, const Vec3&) { return Covec4::Zero().eval(); };
  return f;
}

/// Uniform-pressure translation at velocity v carrying the entropy profile
/// s = s_amp sin(k (x - v_x t)). Density adjusts so that p stays at p0;
/// an exact solution for any amplitude.
inline SmoothField translation(const Eos& eos, double p0, const Vec3& v, double s_amp = 0.0, double k = 1.0) {
  SmoothField f;
  f.state = [=](double t, const Vec3& x) {
    FluidState st;
    st.v = v;
    st.s = s_amp * std::sin(k * (x(0) - v(0) * t));
    st.rho = density_from_pressure(eos, p0, st.s);
    return st;
  };
  f.potential_gradient = [](double, const Vec3&) { return Covec4::Zero().eval(); };
  return f;
}

/// rho = rho0 (1 + amp sin x), v = 0, s = 0. Not a solution: the momentum
/// residual equals dp/dx.
inline SmoothField static_density(double rho0 = 1.0, double amp = 0.1) {
  SmoothField f;
  f.state = [=](double, const Vec3& x) {
    FluidState st;
    st.rho = rho0 * (1.0 + amp * std::sin(x(0)));
    return st;
  };
  f.potential_gradient = [](double, const Vec3&) { return Covec4::Zero().eval(); };
  return f;
}

/// Right-moving isentropic simple wave of an ideal gas. Along the straight
/// characteristics x = xi + (u + c)(xi) t the sound speed is
/// c0 (1 + amp sin(k xi)) and u - 2c/(gamma - 1) is uniform. The domain stops
/// at half the wave-breaking time.
inline SmoothField simple_wave(const Eos& eos, double c0 = 1.0, double u0 = 0.0, double amp = 0.1,
                               double k = 1.0, double s0 = 0.0) {
  const double g = eos.gamma;
  auto speed = [=](double xi) { return c0 * (1.0 + amp * std::sin(k * xi)); };
  auto velocity = [=](double xi) { return u0 + 2.0 * (speed(xi) - c0) / (g - 1.0); };
  const double dlambda_max = (g + 1.0) / (g - 1.0) * c0 * amp * k;
  SmoothField f;
  f.domain.t_min = 0.0;
  f.domain.t_max = 0.5 / dlambda_max;
  f.state = [=](double t, const Vec3& x) {
    // Newton on xi + lambda(xi) t = x, lambda = u + c; monotone before breaking.
    double xi = x(0) - (u0 + c0) * t;
    for (int it = 0; it < 100; ++it) {
      const double lam = velocity(xi) + speed(xi);
      const double dlam = (g + 1.0) / (g - 1.0) * c0 * amp * k * std::cos(k * xi);
      const double step = (xi + lam * t - x(0)) / (1.0 + dlam * t);
      xi -= step;
      if (std::abs(step) <= 1e-16 * (1.0 + std::abs(xi))) break;
    }
    const double c = speed(xi);
    FluidState st;
    st.s = s0;
    st.v = Vec3(velocity(xi), 0.0, 0.0);
    st.rho = std::pow(c * c / (g * eos.K * std::exp(s0 / eos.c_v)), 1.0 / (g - 1.0));
    return st;
  };
  f.potential_gradient = [](double, const Vec3&) { return Covec4::Zero().eval(); };
  return f;
}

/// Mass-conserving manufactured field: a travelling density wave carried by
/// the matching mass flux plus a uniform flux, an entropy ripple and the
/// potential Omega = g.x + omega_amp sin(x + y - t). The momentum equation is
/// not satisfied.
struct AcousticParams {
  double rho0 = 1.0;
  double eps = 0.05;
  Vec3 k = Vec3(1.0, 0.5, -0.3);
  double omega = 0.7;
  double phase = 0.2;
  Vec3 j0 = Vec3(0.3, -0.1, 0.2);
  double s_amp = 0.05;
  Vec3 ks = Vec3(0.4, -0.8, 0.6);
  Vec3 gravity = Vec3(0.0, 0.0, 0.5);
  double omega_amp = 0.1;
};

inline SmoothField mass_conserving(const AcousticParams& p) {
  SmoothField f;
  f.state = [p](double t, const Vec3& x) {
    const double arg = p.k.dot(x) - p.omega * t + p.phase;
    FluidState st;
    st.rho = p.rho0 + p.eps * std::sin(arg);
    const Vec3 flux = p.j0 + p.eps * p.omega / p.k.squaredNorm() * std::sin(arg) * p.k;
    st.v = flux / st.rho;
    st.s = p.s_amp * std::sin(p.ks.dot(x) + 0.3 * t);
    st.omega = p.gravity.dot(x) + p.omega_amp * std::sin(x(0) + x(1) - t);
    return st;
  };
  f.potential_gradient = [p](double t, const Vec3& x) {
    const double c = p.omega_amp * std::cos(x(0) + x(1) - t);
    Covec4 g;
    g << -c, p.gravity(0) + c, p.gravity(1) + c, p.gravity(2);
    return g;
  };
  return f;
}

}  // namespace rhkit::fields
