#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rhkit/eos.hpp"

using namespace rhkit;

namespace {

const Eos kAir = Eos::ideal_gas(1.4, 1.0, 1.0);

TEST(Eos, ClosedFormAtUnitDensity) {
  const ThermoPoint t = evaluate(kAir, 1.0, 0.0);
  EXPECT_DOUBLE_EQ(t.alpha, 2.5);
  EXPECT_DOUBLE_EQ(t.p, 1.0);
  EXPECT_DOUBLE_EQ(t.h, 3.5);
  EXPECT_DOUBLE_EQ(t.theta, 2.5);
  EXPECT_DOUBLE_EQ(t.c2, 1.4);
}

TEST(Eos, PressureAtDoubleDensity) {
  EXPECT_NEAR(pressure(kAir, 2.0, 0.0), std::pow(2.0, 1.4), 1e-15);
  EXPECT_NEAR(pressure(kAir, 2.0, 0.0), 2.6390158215457884, 1e-14);
}

TEST(Eos, PressureMatchesFiniteDifferenceOfAlpha) {
  const oracle::GammaLaw g{1.4, 1.0, 1.0};
  const double rho = 1.3, s = 0.2;
  const double p = pressure(kAir, rho, s);
  EXPECT_LT(std::abs(p - g.p_fd(rho, s, 1e-5)), 1e-6 * p);
}

TEST(Eos, RandomPointsMatchFiniteDifferences) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> rho_d(0.1, 10.0), s_d(-1.0, 1.0);
  for (const Eos& eos : {kAir, Eos::ideal_gas(1.67, 0.7, 2.0), Eos::ideal_gas(1.1, 2.0, 0.5)}) {
    const oracle::GammaLaw g{eos.gamma, eos.c_v, eos.K};
    for (int i = 0; i < 1000; ++i) {
      const double rho = rho_d(rng), s = s_d(rng);
      const ThermoPoint t = evaluate(eos, rho, s);
      ASSERT_LT(std::abs(t.p - g.p_fd(rho, s, 1e-5)), 1e-6 * t.p);
      ASSERT_LT(std::abs(t.theta - g.theta_fd(rho, s, 1e-5)), 1e-6 * t.theta);
      ASSERT_LT(std::abs(t.c2 - g.c2_fd(rho, s, 1e-5)), 1e-6 * t.c2);
      ASSERT_LT(std::abs(t.h - t.alpha - t.p / rho), 1e-14 * t.h);
      ASSERT_GT(t.c2, 0.0);
    }
  }
}

TEST(Eos, PressureIncreasesWithDensityAtFixedEntropy) {
  for (double s : {-1.0, 0.0, 0.7}) {
    double prev = pressure(kAir, 0.1, s);
    for (double rho = 0.2; rho <= 10.0; rho += 0.1) {
      const double p = pressure(kAir, rho, s);
      ASSERT_GT(p, prev);
      prev = p;
    }
  }
}

TEST(Eos, StiffenedGasIsThermodynamicallyConsistent) {
  const Eos water = Eos::stiffened_gas(4.4, 1.0, 1.0, 6.0);
  const double rho = 1.2, s = 0.3, d = 1e-5;
  const ThermoPoint t = evaluate(water, rho, s);
  const double p_fd = rho * rho * (internal_energy(water, rho + d, s) - internal_energy(water, rho - d, s)) / (2 * d);
  const double th_fd = (internal_energy(water, rho, s + d) - internal_energy(water, rho, s - d)) / (2 * d);
  EXPECT_NEAR(t.p, p_fd, 1e-6 * (t.p + water.p_inf));
  EXPECT_NEAR(t.theta, th_fd, 1e-6 * t.theta);
  EXPECT_NEAR(t.p, detail::entropy_factor(water, rho, s) - 6.0, 1e-12);
  const double c2_fd = (pressure(water, rho + d, s) - pressure(water, rho - d, s)) / (2 * d);
  EXPECT_NEAR(t.c2, c2_fd, 1e-6 * t.c2);
  EXPECT_EQ(t.h - t.alpha - t.p / rho, 0.0);
}

TEST(Eos, GibbsResidual) {
  EXPECT_EQ(gibbs_residual(kAir, 1.3, 0.2, 0.0, 0.0), 0.0);
  EXPECT_LT(gibbs_residual(kAir, 1.0, 0.0, 1e-4, 0.0), 1e-9);
  EXPECT_LT(gibbs_residual(kAir, 1.0, 0.0, 1e-4, 1e-4), 1e-9);
  const Eos water = Eos::stiffened_gas(4.4, 1.0, 1.0, 6.0);
  EXPECT_LT(gibbs_residual(water, 1.0, 0.0, 1e-4, 1e-4), 1e-9);
}

TEST(Eos, GibbsResidualIsThirdOrder) {
  const double r1 = gibbs_residual(kAir, 1.3, 0.2, 1e-2, 1e-2);
  const double r2 = gibbs_residual(kAir, 1.3, 0.2, 5e-3, 5e-3);
  EXPECT_NEAR(std::log2(r1 / r2), 3.0, 0.1);
}

TEST(Eos, InversionsRoundTrip) {
  for (const Eos& eos : {kAir, Eos::stiffened_gas(4.4, 1.0, 1.0, 6.0)}) {
    const double rho = 1.7, s = -0.3;
    const ThermoPoint t = evaluate(eos, rho, s);
    EXPECT_NEAR(entropy_from_pressure(eos, rho, t.p), s, 1e-13);
    EXPECT_NEAR(density_from_pressure(eos, t.p, s), rho, 1e-13);
    EXPECT_NEAR(enthalpy_from_pressure(eos, rho, t.p), t.h, 1e-13);
  }
  EXPECT_NEAR(entropy_from_enthalpy(kAir, 1.7, evaluate(kAir, 1.7, -0.3).h), -0.3, 1e-13);
}

TEST(Eos, Errors) {
  const auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const PhysicsError& e) {
      return e.code();
    }
    return Errc::UnsolvedInput;
  };
  EXPECT_EQ(code([] { evaluate(kAir, 0.0, 0.0); }), Errc::NonPositiveDensity);
  EXPECT_EQ(code([] { evaluate(kAir, -1.0, 0.0); }), Errc::NonPositiveDensity);
  EXPECT_EQ(code([] { gibbs_residual(kAir, 0.0, 0.0, 0.0, 0.0); }), Errc::NonPositiveDensity);
  EXPECT_EQ(code([] { Eos::ideal_gas(1.0); }), Errc::InvalidEos);
  EXPECT_EQ(code([] { Eos::ideal_gas(1.4, 0.0); }), Errc::InvalidEos);
  EXPECT_EQ(code([] { Eos::stiffened_gas(4.4, 1.0, 1.0, -1.0); }), Errc::InvalidEos);
  EXPECT_EQ(code([] { evaluate(kAir, 1.0, 1e6); }), Errc::SoundSpeedUndefined);
  EXPECT_EQ(code([] { entropy_from_enthalpy(kAir, 1.0, 0.0); }), Errc::EnthalpyUnreachable);
  EXPECT_EQ(code([] { entropy_from_pressure(kAir, 1.0, -1.0); }), Errc::SoundSpeedUndefined);
  EXPECT_EQ(error_name(Errc::NonPositiveDensity), std::string_view("NonPositiveDensity"));
  EXPECT_EQ(error_module(Errc::NonPositiveDensity), std::string_view("eos"));
}

TEST(Eos, StrongShockLimit) {
  EXPECT_DOUBLE_EQ(kAir.max_compression(), 6.0);
  EXPECT_EQ(to_string(EosKind::StiffenedGas), "stiffened_gas");
}

}  // namespace
