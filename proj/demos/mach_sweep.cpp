// Downstream states of a normal shock in a gamma = 1.4 gas for a range of
// upstream Mach numbers, with the jump residuals of each solved pair.
#include <cstdio>

#include "rhkit/rhkit.hpp"

int main() {
  using namespace rhkit;
  const Eos eos = Eos::ideal_gas(1.4);
  const FluidState up = FluidState::from_pressure(eos, 1.0, Vec3::Zero(), 1.0);
  const SurfaceFrame frame(Vec3::UnitX(), 0.0);

  std::printf("%6s %10s %10s %10s %10s %10s\n", "M1", "rho2/rho1", "p2/p1", "M2", "rh", "ds");
  for (double mach = 1.25; mach <= 5.0; mach += 0.25) {
    const ShockPair pair = solve_downstream(up, eos, frame, MachNumber{mach});
    const ThermoPoint t2 = pair.down.thermo(eos);
    std::printf("%6.2f %10.5f %10.5f %10.5f %10.2e %10.5f\n", mach, pair.down.rho, t2.p,
                pair.u_down() / std::sqrt(t2.c2), rh_residuals(pair, eos).norm(), pair.down.s - up.s);
  }
}
