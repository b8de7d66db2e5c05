#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "rhkit/error.hpp"

namespace rhkit::detail {

struct RootResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

/// Bracketed root of f on [lo, hi]: bisection until the bracket is narrow,
/// then safeguarded Newton steps using a central-difference
/// slope. Any Newton step leaving the bracket falls back to bisection.
template <class Fn>
RootResult bisect_then_newton(Fn&& f, double lo, double hi, int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, flo, 0};
  if (fhi == 0.0) return {hi, fhi, 0};
  if (!std::isfinite(flo) || !std::isfinite(fhi) || (flo > 0.0) == (fhi > 0.0))
    throw PhysicsError(Errc::RootNotBracketed, "function values at the bracket ends share a sign");

  const double eps = std::numeric_limits<double>::epsilon();
  double x = 0.5 * (lo + hi);
  double fx = f(x);
  int it = 0;
  for (; it < max_iter; ++it) {
    if (fx == 0.0) break;
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    const double width = hi - lo;
    if (width <= 4.0 * eps * std::max(std::abs(lo), std::abs(hi))) break;

    double next = 0.5 * (lo + hi);
    if (width < 1e-4 * std::max(std::abs(lo), std::abs(hi))) {
      const double dx = 1e-3 * width;
      const double slope = (f(x + dx) - f(x - dx)) / (2.0 * dx);
      if (slope != 0.0 && std::isfinite(slope)) {
        const double newton = x - fx / slope;
        if (newton > lo && newton < hi) next = newton;
      }
    }
    if (std::abs(next - x) <= 2.0 * eps * std::abs(x)) {
      x = next;
      fx = f(x);
      break;
    }
    x = next;
    fx = f(x);
  }
  return {x, fx, it};
}

/// Plain bisection on a monotone bracket; stops once |f| < ftol or the
/// bracket collapses to adjacent doubles.
template <class Fn>
RootResult bisection(Fn&& f, double lo, double hi, double ftol, int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, flo, 0};
  if (fhi == 0.0) return {hi, fhi, 0};
  if (!std::isfinite(flo) || !std::isfinite(fhi) || (flo > 0.0) == (fhi > 0.0))
    throw PhysicsError(Errc::NoBracket, "function values at the bracket ends share a sign");
  RootResult res{lo, flo, 0};
  if (std::abs(fhi) < std::abs(flo)) res = {hi, fhi, 0};
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    res = {mid, fm, it + 1};
    if (std::abs(fm) < ftol || mid <= lo || mid >= hi) break;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return res;
}

}  // namespace rhkit::detail
