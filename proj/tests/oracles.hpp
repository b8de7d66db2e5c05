#pragma once

// Reference computations written without calling into rhkit, so library
// results can be checked against something other than themselves.

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

// gamma-law internal energy alpha(rho, s) = K rho^(gamma-1) e^(s/c_v) / (gamma-1)
struct GammaLaw {
  double gamma = 1.4;
  double c_v = 1.0;
  double K = 1.0;

  double alpha(double rho, double s) const {
    return K * std::pow(rho, gamma - 1.0) * std::exp(s / c_v) / (gamma - 1.0);
  }
  double p_fd(double rho, double s, double d) const {
    return rho * rho * (alpha(rho + d, s) - alpha(rho - d, s)) / (2.0 * d);
  }
  double theta_fd(double rho, double s, double d) const {
    return (alpha(rho, s + d) - alpha(rho, s - d)) / (2.0 * d);
  }
  double p(double rho, double s) const { return K * std::pow(rho, gamma) * std::exp(s / c_v); }
  double c2_fd(double rho, double s, double d) const { return (p(rho + d, s) - p(rho - d, s)) / (2.0 * d); }
};

inline double bisect(const std::function<double(double)>& f, double lo, double hi, double xtol = 1e-15,
                     int max_iter = 400) {
  double flo = f(lo);
  if (flo * f(hi) > 0.0) throw std::runtime_error("oracle bisection: no sign change");
  for (int i = 0; i < max_iter && hi - lo > xtol * std::max(1.0, std::abs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Closed-form normal-shock relations of a gamma-law gas.
struct NormalShock {
  double density_ratio;
  double pressure_ratio;
  double mach_down;
};

inline NormalShock closed_form_shock(double gamma, double M) {
  const double M2 = M * M;
  NormalShock out;
  out.density_ratio = (gamma + 1.0) * M2 / ((gamma - 1.0) * M2 + 2.0);
  out.pressure_ratio = 1.0 + 2.0 * gamma / (gamma + 1.0) * (M2 - 1.0);
  out.mach_down = std::sqrt((1.0 + 0.5 * (gamma - 1.0) * M2) / (gamma * M2 - 0.5 * (gamma - 1.0)));
  return out;
}

// Bracketed root of the three scalar jump equations of a gamma-law gas:
// mass and momentum eliminate u2 and p2, the energy equation is bisected
// in rho2 over (rho1, rho1 (gamma+1)/(gamma-1)).
struct RhRoot {
  double rho2, p2, u2;
};

inline RhRoot rh_root(double gamma, double rho1, double p1, double u1) {
  const auto down = [&](double rho2) {
    const double u2 = rho1 * u1 / rho2;
    const double p2 = p1 + rho1 * u1 * u1 - rho1 * u1 * u2;
    return RhRoot{rho2, p2, u2};
  };
  const auto energy = [&](double rho2) {
    const RhRoot d = down(rho2);
    const double h1 = gamma * p1 / ((gamma - 1.0) * rho1);
    const double h2 = gamma * d.p2 / ((gamma - 1.0) * rho2);
    return (0.5 * u1 * u1 + h1) - (0.5 * d.u2 * d.u2 + h2);
  };
  const double rmax = (gamma + 1.0) / (gamma - 1.0);
  // The trivial root rho2 = rho1 is excluded by starting slightly above it.
  const double lo = rho1 * (1.0 + 1e-9), hi = rho1 * rmax * (1.0 - 1e-12);
  return down(bisect(energy, lo, hi));
}

// Two-wave pressure function of the exact gamma-law Riemann problem.
struct Side {
  double rho, u, p;
};

inline double side_function(double gamma, const Side& k, double p) {
  const double c = std::sqrt(gamma * k.p / k.rho);
  if (p > k.p) {
    const double A = 2.0 / ((gamma + 1.0) * k.rho);
    const double B = (gamma - 1.0) / (gamma + 1.0) * k.p;
    return (p - k.p) * std::sqrt(A / (p + B));
  }
  return 2.0 * c / (gamma - 1.0) * (std::pow(p / k.p, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
}

struct Star {
  double p, u;
};

inline Star riemann_star(double gamma, const Side& L, const Side& R) {
  const auto f = [&](double p) { return side_function(gamma, L, p) + side_function(gamma, R, p) + (R.u - L.u); };
  double lo = 1e-12, hi = std::max(L.p, R.p);
  while (f(hi) < 0.0) hi *= 2.0;
  for (int i = 0; i < 500; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::abs(fm) < 1e-12) {
      lo = hi = mid;
      break;
    }
    (fm < 0.0 ? lo : hi) = mid;
  }
  const double p = 0.5 * (lo + hi);
  return {p, 0.5 * (L.u + R.u) + 0.5 * (side_function(gamma, R, p) - side_function(gamma, L, p))};
}

// Lagrangian of a conservative fluid as a function of the 4x4 tangent map,
// L = rho (|r/mu|^2 / 2 - alpha - Omega) with rho = f mu / det B.
struct Lagrangian {
  GammaLaw eos;
  double f = 1.0;
  double s = 0.0;
  double omega = 0.0;

  double operator()(const Eigen::Matrix4d& B) const {
    const double mu = B(0, 0);
    const Eigen::Vector3d v = B.block<3, 1>(1, 0) / mu;
    const double rho = f * mu / B.determinant();
    return rho * (0.5 * v.squaredNorm() - eos.alpha(rho, s) - omega);
  }

  // G(i, j) = dL / dB(j, i), so that dL = Tr(G dB).
  Eigen::Matrix4d gradient(const Eigen::Matrix4d& B, double d = 1e-6) const {
    Eigen::Matrix4d G;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Eigen::Matrix4d Bp = B, Bm = B;
        Bp(j, i) += d;
        Bm(j, i) -= d;
        G(i, j) = ((*this)(Bp) - (*this)(Bm)) / (2.0 * d);
      }
    return G;
  }

  Eigen::Matrix4d T(const Eigen::Matrix4d& B) const {
    return (*this)(B) * Eigen::Matrix4d::Identity() + B * gradient(B);
  }
  Eigen::Matrix4d T0(const Eigen::Matrix4d& B) const { return -B.determinant() * gradient(B) * B; }
};

}  // namespace oracle
