#pragma once

// Space-time tangent-map algebra. The 4x4 map B = dz/dZ of a motion
// z = (t, x) = Phi(lambda, X) splits into blocks
//
//       | mu  w* |        dt = mu dlambda + w* dX
//   B = |        |        dx = r  dlambda + B3 dX
//       | r   B3 |
//
// from which v = r / mu and F = B3 - v w*. Moving surfaces carry the normal
// form N* = (-D_n, n*) and the relative velocity u = n.v - D_n.

#include <cmath>
#include <utility>

#include "rhkit/error.hpp"
#include "rhkit/linalg.hpp"

namespace rhkit {

/// |u| below this is treated as a contact surface (no mass flux).
inline constexpr double kContactThreshold = 1e-10;

struct TangentMap {
  double mu = 1.0;
  Covec3 w = Covec3::Zero();
  Vec3 r = Vec3::Zero();
  Mat3 B3 = Mat3::Identity();

  Mat4 matrix() const {
    Mat4 m;
    m(0, 0) = mu;
    m.block<1, 3>(0, 1) = w;
    m.block<3, 1>(1, 0) = r;
    m.block<3, 3>(1, 1) = B3;
    return m;
  }
};

struct Motion4Velocity {
  Vec3 v = Vec3::Zero();
  Mat3 F = Mat3::Identity();

  /// The space-time velocity (1, v).
  Vec4 four_velocity() const {
    Vec4 V;
    V << 1.0, v;
    return V;
  }
};

/// Unit normal n of the surface section S_t and its normal speed D_n.
class SurfaceFrame {
 public:
  SurfaceFrame() = default;

  /// Normalises `normal`; a zero vector is rejected.
  SurfaceFrame(const Vec3& normal, double normal_speed) : D_n_(normal_speed) {
    const double len = normal.norm();
    if (!(len > 0.0) || !std::isfinite(len))
      throw PhysicsError(Errc::InvalidFrame, "surface normal must be a non-zero finite vector");
    n_ = normal / len;
  }

  const Vec3& n() const { return n_; }
  double D_n() const { return D_n_; }

  /// N* = (-D_n, n*).
  Covec4 normal_form() const {
    Covec4 N;
    N << -D_n_, n_.transpose();
    return N;
  }

  SurfaceFrame with_speed(double normal_speed) const { return SurfaceFrame(n_, normal_speed); }

 private:
  Vec3 n_ = Vec3::UnitX();
  double D_n_ = 0.0;
};

/// Reference-space image of the surface: n0' = n0 / u0 and u0 = -D_{n0}.
struct ReferenceFrame {
  Covec3 n0p = Covec3::Zero();
  double u0 = 0.0;

  /// Unit reference normal n0 = u0 n0'.
  Covec3 n0() const { return u0 * n0p; }
};

inline double relative_velocity(const SurfaceFrame& frame, const Vec3& v) {
  return frame.n().dot(v) - frame.D_n();
}

inline std::pair<TangentMap, Motion4Velocity> decompose_tangent_map(const Mat4& B4) {
  TangentMap tm;
  tm.mu = B4(0, 0);
  if (tm.mu == 0.0 || !std::isfinite(tm.mu))
    throw PhysicsError(Errc::DegenerateParametrization, "dt/dlambda vanishes");
  tm.w = B4.block<1, 3>(0, 1);
  tm.r = B4.block<3, 1>(1, 0);
  tm.B3 = B4.block<3, 3>(1, 1);

  Motion4Velocity mv;
  mv.v = tm.r / tm.mu;
  mv.F = tm.B3 - mv.v * tm.w;
  if (mv.F.determinant() == 0.0)
    throw PhysicsError(Errc::SingularTangentMap, "deformation gradient is singular");
  return {tm, mv};
}

/// Inverse of decompose_tangent_map: r = mu v, B3 = F + v w*.
inline Mat4 assemble_tangent_map(double mu, const Covec3& w, const Vec3& v, const Mat3& F) {
  if (mu == 0.0 || !std::isfinite(mu))
    throw PhysicsError(Errc::DegenerateParametrization, "dt/dlambda vanishes");
  return TangentMap{mu, w, mu * v, F + v * w}.matrix();
}

/// The lambda = t map A = [[1, 0*], [v, F]].
inline Mat4 time_parametrized_map(const Vec3& v, const Mat3& F) {
  return assemble_tangent_map(1.0, Covec3::Zero(), v, F);
}

/// Shock-adapted parametrisation covector w* = -(n* F) / u.
inline Covec3 w_from_deformation(const Mat3& F, double u, const Vec3& n) {
  if (std::abs(u) < kContactThreshold)
    throw PhysicsError(Errc::ZeroRelativeVelocity, "w is undefined on a contact surface");
  if (F.determinant() == 0.0) throw PhysicsError(Errc::SingularF, "deformation gradient is singular");
  return -(n.transpose() * F) / u;
}

/// Reference image of a surface seen from a side with deformation F and
/// relative velocity u. The sign of u0 follows u so that n0 = u0 n0' is unit.
inline ReferenceFrame reference_frame(const Mat3& F, double u, const Vec3& n) {
  ReferenceFrame rf;
  rf.n0p = -w_from_deformation(F, u, n);
  rf.u0 = std::copysign(1.0 / rf.n0p.norm(), u);
  return rf;
}

/// [F] = [v] n0'* (rank one).
inline Mat3 jump_deformation(const Vec3& dv, const Covec3& n0p) { return dv * n0p; }

/// Reference-space virtual displacement from a space-time one:
/// zeta_hat = -B^-1 zeta_tilde.
inline Vec4 map_variation(const Mat4& B4, const Vec4& zeta_tilde) {
  const Eigen::FullPivLU<Mat4> lu(B4);
  if (!lu.isInvertible()) throw PhysicsError(Errc::SingularTangentMap, "tangent map is not invertible");
  return -lu.solve(zeta_tilde);
}

/// zeta_tilde = -B zeta_hat.
inline Vec4 unmap_variation(const Mat4& B4, const Vec4& zeta_hat) { return -(B4 * zeta_hat); }

}  // namespace rhkit
