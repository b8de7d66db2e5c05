#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rhkit/field_expr.hpp"
#include "rhkit/fields.hpp"
#include "rhkit/tensors.hpp"

using namespace rhkit;

namespace {

const Eos kAir = Eos::ideal_gas(1.4);

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const PhysicsError& e) {
    return e.code();
  }
  return Errc::UnsolvedInput;
}

Covec4 table_form(const MotionResiduals& r) {
  Covec4 out;
  out << r.energy, -r.momentum;
  return out;
}

fields::AcousticParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  fields::AcousticParams p;
  p.rho0 = 1.0 + 0.5 * std::abs(u(rng));
  p.eps = 0.1 * std::abs(u(rng));
  p.k = Vec3(u(rng), u(rng), u(rng)) + Vec3(0.5, 0.0, 0.0);
  p.omega = u(rng);
  p.phase = u(rng);
  p.j0 = 0.5 * Vec3(u(rng), u(rng), u(rng));
  p.s_amp = 0.1 * u(rng);
  p.ks = Vec3(u(rng), u(rng), u(rng));
  p.gravity = Vec3(u(rng), u(rng), u(rng));
  p.omega_amp = 0.2 * u(rng);
  return p;
}

TEST(Tensors, EnergyDensity) {
  EXPECT_DOUBLE_EQ(energy_density(FluidState{}, kAir), 2.5);
  EXPECT_DOUBLE_EQ(energy_density(FluidState{1.0, Vec3(2, 0, 0), 0.0, 0.0}, kAir), 4.5);
  const FluidState st{2.0, Vec3(1, 1, 0), 0.0, 1.0};
  EXPECT_NEAR(energy_density(st, kAir), 2.0 * (1.0 + evaluate(kAir, 2.0, 0.0).alpha + 1.0), 1e-14);
  EXPECT_EQ(code_of([] { energy_density(FluidState{0.0}, kAir); }), Errc::NonPositiveDensity);
}

TEST(Tensors, TAtRest) {
  Mat4 expected = Mat4::Identity();
  expected(0, 0) = -2.5;
  EXPECT_LT((energy_momentum_T(FluidState{}, kAir).entries - expected).norm(), 1e-15);
}

TEST(Tensors, TMovingState) {
  const SpaceTimeTensor T = energy_momentum_T(FluidState{1.0, Vec3(1, 0, 0), 0.0, 0.0}, kAir);
  EXPECT_DOUBLE_EQ(T(1, 1), 2.0);
  EXPECT_DOUBLE_EQ(T(1, 0), -4.0);
  EXPECT_DOUBLE_EQ(T(0, 0), -3.0);
}

TEST(Tensors, TBlocksMatchDefinitions) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const FluidState st{1.0 + std::abs(u(rng)), Vec3(u(rng), u(rng), u(rng)), u(rng), u(rng)};
    const SpaceTimeTensor T = energy_momentum_T(st, kAir);
    const oracle::GammaLaw g;
    const double alpha = g.alpha(st.rho, st.s), p = g.p(st.rho, st.s);
    const double e = st.rho * (0.5 * st.v.squaredNorm() + alpha + st.omega);
    ASSERT_NEAR(T.time_time(), -e, 1e-14 * std::max(1.0, e));
    ASSERT_LT((T.time_space() - st.rho * st.v.transpose()).norm(), 1e-14);
    ASSERT_LT((T.space_time() + (e + p) * st.v).norm(), 1e-13);
    ASSERT_LT((T.space_space() - (st.rho * st.v * st.v.transpose() + p * Mat3::Identity())).norm(), 1e-14);
    ASSERT_LT((T.space_space() - T.space_space().transpose()).norm(), 1e-15 * T.space_space().norm());
  }
}

TEST(Tensors, T0AtRest) {
  const FluidState st{};
  const double m0 = specific_m(st, kAir);
  const SpaceTimeTensor T0 = reference_tensor_T0(st, Mat3::Identity(), 1.0, Covec3::Zero(), 1.0, kAir);
  Mat4 expected = Mat4::Zero();
  expected.block<3, 3>(1, 1) = m0 * Mat3::Identity();
  EXPECT_EQ(T0.entries, expected);
  EXPECT_DOUBLE_EQ(m0, -3.5);
  EXPECT_EQ(code_of([&] { reference_tensor_T0(st, Mat3::Identity(), 1.0, Covec3::Zero(), 0.0, kAir); }),
            Errc::NonPositiveReferenceDensity);
}

// Both tensors follow from the Lagrangian written as a function of the
// tangent map: T = L 1 + B dL/dB and T0 = -det B (dL/dB) B.
TEST(Tensors, TablesAgreeWithLagrangianDerivatives) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (int trial = 0; trial < 20; ++trial) {
    Mat4 B = Mat4::Identity();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) B(i, j) += u(rng);
    B(0, 0) += 0.5;
    B.block<3, 1>(1, 0) *= 4.0;
    ASSERT_GT(B.determinant(), 0.0);
    const oracle::Lagrangian L{oracle::GammaLaw{}, 1.0 + std::abs(u(rng)), u(rng), u(rng)};

    const auto [tm, mv] = decompose_tangent_map(B);
    const FluidState st{L.f * tm.mu / B.determinant(), mv.v, L.s, L.omega};
    const Mat4 T_oracle = L.T(B);
    const Mat4 T0_oracle = L.T0(B);
    const Mat4 T = energy_momentum_T(st, kAir).entries;
    const Mat4 T0 = reference_tensor_T0(st, mv.F, tm.mu, tm.w, L.f, kAir).entries;
    ASSERT_LT((T - T_oracle).cwiseAbs().maxCoeff(), 1e-6 * std::max(1.0, T.cwiseAbs().maxCoeff()));
    ASSERT_LT((T0 - T0_oracle).cwiseAbs().maxCoeff(), 1e-6 * std::max(1.0, T0.cwiseAbs().maxCoeff()));
    ASSERT_NEAR(reference_density(st.rho, B), L.f, 1e-13);
  }
}

TEST(Tensors, BodyForce) {
  EXPECT_EQ(body_force(FluidState{2.0}, Covec4::Zero()), Covec4::Zero());
  EXPECT_EQ(body_force(FluidState{2.0}, Covec4(0, 1, 0, 0)), Covec4(0, -2, 0, 0));
  const double g = 9.81;
  EXPECT_EQ(body_force(FluidState{1.5}, Covec4(0, 0, 0, g)), Covec4(0, 0, 0, -1.5 * g));
}

TEST(Tensors, ConstantFieldHasZeroResiduals) {
  const SmoothField f = fields::constant(FluidState{1.3, Vec3(0.3, -0.2, 0.1), 0.4, 0.0});
  const MotionResiduals r = motion_residuals(f, kAir, 0.2, Vec3(0.1, 0.2, 0.3));
  EXPECT_LT(std::abs(r.energy), 1e-12);
  EXPECT_LT(r.momentum.norm(), 1e-12);
  EXPECT_LT(r.thermo.norm(), 1e-12);
  EXPECT_LT(std::abs(r.entropy), 1e-12);
  EXPECT_LT(std::abs(r.mass), 1e-12);
  EXPECT_LT(div_T_residual(f, kAir, 0.2, Vec3(0.1, 0.2, 0.3)).norm(), 1e-12);
}

TEST(Tensors, RigidTranslationHasZeroResiduals) {
  const SmoothField f = fields::translation(kAir, 1.0, Vec3(0.5, 0.2, -0.1));
  const MotionResiduals r = motion_residuals(f, kAir, 0.3, Vec3(-0.4, 0.2, 0.9));
  EXPECT_LT(std::abs(r.energy), 1e-12);
  EXPECT_LT(r.momentum.norm(), 1e-12);
  EXPECT_LT(r.thermo.norm(), 1e-12);
  EXPECT_LT(std::abs(r.entropy), 1e-12);
}

TEST(Tensors, EntropyCarryingTranslationIsNearlyExact) {
  const SmoothField f = fields::translation(kAir, 1.0, Vec3(0.5, 0.2, 0.0), 0.1);
  const MotionResiduals r = motion_residuals(f, kAir, 0.3, Vec3(-0.4, 0.2, 0.9), 1e-3);
  EXPECT_LT(std::abs(r.entropy), 1e-7);
  EXPECT_LT(std::abs(r.mass), 1e-7);
  EXPECT_LT(r.momentum.norm(), 1e-7);
}

double simple_wave_residual(double h) {
  const SmoothField f = fields::simple_wave(kAir);
  const MotionResiduals r = motion_residuals(f, kAir, 0.4, Vec3(0.3, 0.0, 0.0), h);
  return std::sqrt(r.energy * r.energy + r.momentum.squaredNorm() + r.mass * r.mass);
}

TEST(Tensors, SimpleWaveResidualsConvergeAtSecondOrder) {
  const double r1 = simple_wave_residual(1e-2);
  const double r2 = simple_wave_residual(5e-3);
  const double r3 = simple_wave_residual(2.5e-3);
  EXPECT_NEAR(std::log2(r1 / r2), 2.0, 0.1);
  EXPECT_NEAR(std::log2(r2 / r3), 2.0, 0.1);
  const SmoothField f = fields::simple_wave(kAir);
  const MotionResiduals r = motion_residuals(f, kAir, 0.4, Vec3(0.3, 0.0, 0.0), 1e-3);
  EXPECT_LT(std::abs(r.entropy), 1e-12);
  EXPECT_LT(r.thermo.norm(), 1e-5);
}

TEST(Tensors, SimpleWaveStaysInsideItsDomain) {
  const SmoothField f = fields::simple_wave(kAir);
  EXPECT_EQ(code_of([&] { motion_residuals(f, kAir, 0.0, Vec3::Zero(), 1e-3); }), Errc::StencilOutOfDomain);
  EXPECT_EQ(code_of([&] { motion_residuals(f, kAir, f.domain.t_max, Vec3::Zero(), 1e-3); }),
            Errc::StencilOutOfDomain);
  EXPECT_EQ(code_of([&] { motion_residuals(f, kAir, 0.3, Vec3::Zero(), 0.0); }), Errc::StencilOutOfDomain);
}

TEST(Tensors, StaticDensityMatchesAnalyticPressureGradient) {
  const SmoothField f = fields::static_density();
  for (double x : {-0.7, 0.0, 0.4, 1.3}) {
    const Covec4 d = div_T_residual(f, kAir, 0.0, Vec3(x, 0.2, -0.1));
    const double rho = 1.0 + 0.1 * std::sin(x);
    const double dpdx = 1.4 * std::pow(rho, 0.4) * 0.1 * std::cos(x);
    EXPECT_EQ(d(0), 0.0);
    EXPECT_NEAR(d(1), -dpdx, 1e-8);
    EXPECT_LT(std::abs(d(2)) + std::abs(d(3)), 1e-12);
    EXPECT_GT(std::abs(d(1)), 1e-3);
  }
}

TEST(Tensors, DivergenceTableMatchesEquationsOnManufacturedFields) {
  const io::json expr = io::json::parse(R"({
    "rho": {"constant": 1.0, "terms": [{"kind": "sin", "coef": 0.1, "k": [0.3, 1.0, 0.0, 0.0]}]},
    "v": [{"constant": 0.2, "terms": [{"kind": "monomial", "coef": 0.05, "powers": [0, 1, 1, 0]}]},
          {"terms": [{"kind": "cos", "coef": 0.1, "k": [0.0, 0.0, 1.0, 0.5], "phase": 0.3}]},
          0.0],
    "s": {"terms": [{"kind": "sin", "coef": 0.05, "k": [0.2, 0.5, -0.4, 0.0]}]},
    "omega": {"terms": [{"kind": "monomial", "coef": 0.5, "powers": [0, 0, 0, 1]}]}})");
  const std::vector<SmoothField> cases{fields::mass_conserving(fields::AcousticParams{}), fields::static_density(),
                                       ExprField::from_json(expr).smooth_field()};
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const SmoothField& f : cases)
    for (int i = 0; i < 50; ++i) {
      const double t = 0.5 * u(rng);
      const Vec3 x(u(rng), u(rng), u(rng));
      const Covec4 d = div_T_residual(f, kAir, t, x);
      ASSERT_LT((d - table_form(motion_residuals(f, kAir, t, x))).norm(), 1e-10);
    }
}

TEST(Tensors, ThermodynamicFormOnMassConservingFields) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const SmoothField f = fields::mass_conserving(random_params(rng));
    const double t = u(rng);
    const Vec3 x(u(rng), u(rng), u(rng));
    const MotionResiduals r = motion_residuals(f, kAir, t, x, 2e-5);
    const double rho = f.state(t, x).rho;
    ASSERT_LT((r.momentum - rho * r.thermo.transpose()).norm(), 1e-10);
    ASSERT_GT(r.momentum.norm(), 1e-4);
  }
}

// Without mass conservation the two forms differ by v [drho/dt + div(rho v)].
TEST(Tensors, ThermodynamicFormDiffersByMassResidual) {
  const SmoothField f = fields::static_density();
  const SmoothField g = fields::translation(kAir, 1.0, Vec3(0.3, 0.0, 0.0), 0.2);
  for (const SmoothField* field : {&f, &g}) {
    const Vec3 x(0.3, -0.2, 0.5);
    const MotionResiduals r = motion_residuals(*field, kAir, 0.1, x, 1e-5);
    const FluidState st = field->state(0.1, x);
    EXPECT_LT((r.momentum - st.rho * r.thermo.transpose() - r.mass * st.v.transpose()).norm(), 1e-8);
  }
}

TEST(Tensors, NumericPotentialGradientFallback) {
  SmoothField f = fields::mass_conserving(fields::AcousticParams{});
  const Vec3 x(0.2, 0.1, -0.3);
  const MotionResiduals analytic = motion_residuals(f, kAir, 0.1, x);
  f.potential_gradient = nullptr;
  const MotionResiduals numeric = motion_residuals(f, kAir, 0.1, x);
  EXPECT_NEAR(analytic.energy, numeric.energy, 1e-8);
  EXPECT_LT((analytic.momentum - numeric.momentum).norm(), 1e-8);
}

TEST(Tensors, FieldExpressionGradientIsExact) {
  const io::json j = io::json::parse(R"({"constant": 2.0, "terms": [
      {"kind": "sin", "coef": 0.3, "k": [1.0, 0.5, 0.0, -0.2], "phase": 0.1},
      {"kind": "cos", "coef": -0.2, "k": [0.0, 1.0, 1.0, 0.0]},
      {"kind": "monomial", "coef": 1.5, "powers": [1, 2, 0, 1]}]})");
  const FieldExpr e = FieldExpr::from_json(j);
  const double t = 0.3, d = 1e-6;
  const Vec3 x(0.4, -0.7, 1.1);
  const Covec4 g = e.gradient(t, x);
  EXPECT_NEAR(g(0), (e(t + d, x) - e(t - d, x)) / (2 * d), 1e-8);
  for (int a = 0; a < 3; ++a) {
    Vec3 xp = x, xm = x;
    xp(a) += d;
    xm(a) -= d;
    EXPECT_NEAR(g(a + 1), (e(t, xp) - e(t, xm)) / (2 * d), 1e-8);
  }
  EXPECT_THROW(FieldExpr::from_json(io::json::parse(R"({"terms": [{"kind": "tan", "coef": 1}]})")),
               std::invalid_argument);
  EXPECT_THROW(FieldExpr::from_json(io::json::parse(R"({"bogus": 1})")), std::invalid_argument);
}

}  // namespace
