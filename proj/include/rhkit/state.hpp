#pragma once

#include "rhkit/eos.hpp"
#include "rhkit/linalg.hpp"

namespace rhkit {

/// Primitive fluid state. Thermodynamic quantities are derived through an Eos.
struct FluidState {
  double rho = 1.0;
  Vec3 v = Vec3::Zero();
  double s = 0.0;
  double omega = 0.0;  // specific body-force potential

  ThermoPoint thermo(const Eos& eos) const { return evaluate(eos, rho, s); }

  /// State built from (rho, v, p) instead of (rho, v, s).
  static FluidState from_pressure(const Eos& eos, double rho, const Vec3& v, double p,
                                  double omega = 0.0) {
    return FluidState{rho, v, entropy_from_pressure(eos, rho, p), omega};
  }
};

}  // namespace rhkit
