// Exact solution of the Sod shock tube at t = 0.2, printed as x rho u p.
#include <cstdio>

#include "rhkit/rhkit.hpp"

int main() {
  using namespace rhkit;
  const Eos eos = Eos::ideal_gas(1.4);
  const FluidState left = FluidState::from_pressure(eos, 1.0, Vec3::Zero(), 1.0);
  const FluidState right = FluidState::from_pressure(eos, 0.125, Vec3::Zero(), 0.1);
  const RiemannSolution sol = solve_star(left, right, eos);
  std::printf("# p* = %.10f  u* = %.10f  (%s, %s)\n", sol.p_star, sol.u_star, to_string(sol.wave_left),
              to_string(sol.wave_right));

  const double t = 0.2;
  for (int i = 0; i < 100; ++i) {
    const double x = -0.5 + (i + 0.5) / 100.0;
    const FluidState s = sample(sol, left, right, eos, x / t);
    std::printf("%.5f %.8f %.8f %.8f\n", x, s.rho, s.v.x(), pressure(eos, s.rho, s.s));
  }
}
