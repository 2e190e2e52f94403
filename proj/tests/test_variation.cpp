#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "teichcurve/errors.hpp"
#include "teichcurve/variation.hpp"

namespace teichcurve {
namespace {

using testing::C;
using testing::pi;

UHPVariationField field_of(const std::vector<C>& a) {
  return UHPVariationField::from_cusp_form(CuspFormCoeffs(a));
}

TEST(WDot, SingleModeAtI) {
  const C v = eval_w_dot(field_of({C(1.0, 0.0)}), C(0.0, 1.0));
  EXPECT_NEAR(v.real(), 0.0, 1e-18);
  EXPECT_NEAR(v.imag(), -6.89031237365184078e-4, 1e-17);
}

TEST(WDot, ZeroForm) {
  const auto f = field_of({C{}, C{}});
  EXPECT_EQ(eval_w_dot(f, C(0.3, 0.7)), C{});
}

TEST(WDot, FixesZeroAndOne) {
  std::mt19937_64 rng(61);
  for (int n = 1; n <= 64; ++n) {
    const auto f = UHPVariationField::from_cusp_form(testing::random_cusp_form(rng, n));
    EXPECT_LE(std::abs(eval_w_dot(f, C{})), 1e-14) << n;
    EXPECT_LE(std::abs(eval_w_dot(f, C(1.0, 0.0))), 1e-14) << n;
  }
}

TEST(WDot, TranslatesByPeriod) {
  // On the real axis only the potential terms survive.
  std::mt19937_64 rng(62);
  const auto f = UHPVariationField::from_cusp_form(testing::random_cusp_form(rng, 7));
  for (double x : {0.1, 0.37, 0.8}) {
    EXPECT_LE(std::abs(eval_w_dot(f, C(x, 0.0)) - eval_w_dot(f, C(x + 1.0, 0.0))), 1e-14);
  }
}

TEST(WDot, DbarRecoversMu) {
  const HarmonicBeltramiUHP mu(CuspFormCoeffs({C(1.0, 0.0)}));
  const double r1 = dbar_residual_uhp(mu, C(0.0, 1.0), 1e-3);
  const double r2 = dbar_residual_uhp(mu, C(0.0, 1.0), 5e-4);
  EXPECT_LE(r1, 1e-5 * std::abs(eval_mu(mu, C(0.0, 1.0))));
  EXPECT_NEAR(r1 / r2, 4.0, 0.5);
}

TEST(WDot, DbarSecondOrderConvergence) {
  std::mt19937_64 rng(63);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const HarmonicBeltramiUHP mu(testing::random_cusp_form(rng, 1 + trial % 5));
    const C z(u(rng), 0.2 + 0.8 * u(rng));
    const double r1 = dbar_residual_uhp(mu, z, 1e-2);
    const double r2 = dbar_residual_uhp(mu, z, 5e-3);
    if (r1 < 1e-10) continue;
    EXPECT_GE(r1 / r2, 3.5);
    EXPECT_LE(r1 / r2, 4.5);
  }
}

TEST(WDot, DbarStencilDomain) {
  const HarmonicBeltramiUHP mu(CuspFormCoeffs({C(1.0, 0.0)}));
  EXPECT_THROW(dbar_residual_uhp(mu, C(0.0, 1e-4), 1e-3), DomainError);
}

TEST(OmegaDot, BoundaryClosedForm) {
  const DiscVariationField f(std::vector<C>{C(1.0, 0.0)}, C{});
  const C v = omega_dot_boundary(f, pi / 4.0);
  EXPECT_NEAR(v.real(), -std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(v.imag(), std::sqrt(2.0), 1e-15);
  EXPECT_LE(std::abs(eval_omega_dot_disc(f, std::polar(1.0, pi / 4.0)) - v), 1e-15);
}

TEST(OmegaDot, InteriorAgreesWithBoundaryForm) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 10; ++trial) {
    const DiscVariationField f(testing::random_complex(rng, 12), C(0.0, 0.3 * trial));
    for (int k = 0; k < 64; ++k) {
      const double th = 2.0 * pi * k / 64;
      EXPECT_LE(std::abs(eval_omega_dot_disc(f, std::polar(1.0, th)) - omega_dot_boundary(f, th)), 1e-13);
    }
  }
}

TEST(OmegaDot, DbarRecoversLambda) {
  std::mt19937_64 rng(65);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const DiscVariationField f(testing::random_complex(rng, 6), C(0.0, u(rng)));
    const C z = std::polar(0.85 * u(rng), 2.0 * pi * u(rng));
    const double r1 = dbar_residual_disc(f, z, 1e-2);
    const double r2 = dbar_residual_disc(f, z, 5e-3);
    if (r1 < 1e-10) continue;
    EXPECT_GE(r1 / r2, 3.5);
    EXPECT_LE(r1 / r2, 4.5);
  }
}

TEST(OmegaDot, Errors) {
  EXPECT_THROW(DiscVariationField(std::vector<C>{C(1.0, 0.0)}, C(0.5, 0.0)), DomainError);
  const DiscVariationField f(std::vector<C>{C(1.0, 0.0)}, C{});
  EXPECT_THROW(eval_omega_dot_disc(f, C(1.5, 0.0)), DomainError);
  EXPECT_THROW(dbar_residual_disc(f, C(0.9995, 0.0), 1e-3), DomainError);
}

TEST(VDot, SineField) {
  const CircleVectorField c(0.0, {C(0.0, 1.0)});
  const C v = eval_v_dot(c, pi / 2.0);
  EXPECT_NEAR(v.real(), 2.0, 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  EXPECT_LE(std::abs(eval_v_dot(c, 0.0)), 1e-15);
  EXPECT_EQ(eval_v_dot(CircleVectorField{}, 1.0), C{});
}

TEST(VDot, TangentToCircle) {
  std::mt19937_64 rng(66);
  const auto c = d0_P(testing::random_cusp_form(rng, 9));
  for (int k = 0; k < 32; ++k) {
    const double th = 2.0 * pi * k / 32;
    // v_dot is i e^{i theta} times a real function.
    const C ratio = eval_v_dot(c, th) / (C(0.0, 1.0) * std::polar(1.0, th));
    EXPECT_LE(std::abs(ratio.imag()), 1e-13);
  }
}

TEST(Chain, Examples) {
  EXPECT_LE(chain_residual(CuspFormCoeffs({C(4.0 * pi * pi, 0.0)}), 0.25), 1e-12);
  EXPECT_LE(chain_residual(CuspFormCoeffs({C(1.0, 0.0)}), 0.0), 1e-12);
  EXPECT_EQ(chain_residual(CuspFormCoeffs{}, 0.4), 0.0);
}

TEST(Chain, RandomForms) {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto phi = testing::random_cusp_form(rng, 1 + trial % 32);
    EXPECT_LE(chain_residual(phi, u(rng)), 1e-12);
  }
}

TEST(DeriveA1, Examples) {
  EXPECT_LE(std::abs(derive_a1(CuspFormCoeffs({C(1.0, 0.0), C(2.0, 0.0)}))), 1e-15);
  const C a1 = derive_a1(CuspFormCoeffs({C{}, C(0.0, 8.0 * pi * pi)}));
  EXPECT_NEAR(a1.real(), 0.0, 1e-15);
  EXPECT_NEAR(a1.imag(), 0.5, 1e-15);
}

TEST(DeriveA1, PurelyImaginary) {
  std::mt19937_64 rng(68);
  for (int trial = 0; trial < 100; ++trial) {
    EXPECT_LE(std::abs(derive_a1(testing::random_cusp_form(rng, 1 + trial % 16)).real()), 1e-14);
  }
}

TEST(MoebiusMatch, CorrectedFieldMatchesVDot) {
  EXPECT_LE(moebius_match_residual(CuspFormCoeffs({C(1.0, 0.0), C(0.0, 2.0), C{}, C(5.0, 0.0)})), 1e-9);
  std::mt19937_64 rng(69);
  for (int trial = 0; trial < 50; ++trial) {
    EXPECT_LE(moebius_match_residual(testing::random_cusp_form(rng, 1 + trial % 32)), 1e-9);
  }
}

TEST(MoebiusMatch, CorrectedFieldCoefficients) {
  std::mt19937_64 rng(70);
  const auto phi = testing::random_cusp_form(rng, 6);
  const auto f = moebius_corrected_disc_field(phi);
  const auto c = d0_P(phi);
  ASSERT_EQ(f.betas().size(), 5u);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(f.betas()[n - 2], C(0.0, 1.0) * c.c(n));
  EXPECT_EQ(f.a1(), derive_a1(phi));
}

}  // namespace
}  // namespace teichcurve
