// A jump that satisfies the reference-space conditions but not the
// space-time ones: normal momentum is not conserved across it.
#include <cstdio>

#include "rhkit/rhkit.hpp"

int main() {
  using namespace rhkit;
  const Eos eos = Eos::ideal_gas(1.4);
  const FluidState up = FluidState::from_pressure(eos, 1.0, Vec3::Zero(), 1.0);
  const double D_n = 2.0 * sound_speed(eos, up.rho, up.s);
  const SurfaceFrame frame(Vec3::UnitX(), -D_n);

  std::printf("%8s %14s %14s %14s\n", "rho2", "reference", "space-time", "[p+rho u^2]");
  for (double rho2 : {1.5, 2.0, 2.5, 8.0 / 3.0, 3.0, 4.0}) {
    const ShockPair pair = construct_crh2_pair(up, eos, frame, rho2);
    std::printf("%8.4f %14.3e %14.3e %14.6f\n", rho2, reference_term_norm(pair, eos),
                spacetime_term_norm(pair, eos), rh_residuals(pair, eos).momentum_n);
  }
}
