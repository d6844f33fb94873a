// Copyright 2026 The crtrace Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "crtrace/errors.hpp"
#include "crtrace/intertwine.hpp"
#include "crtrace/trace.hpp"

namespace crtrace {
namespace {

constexpr int kN = 1;

RadialTestFunction bumped(const RadialTestFunction& u, double eps) {
  // Bump with nonzero φ^γ coefficient, so both boundary values move.
  return RadialTestFunction::with_profile(
      u.n, u.gamma, u.bd, u.profile + eps * RadialProfile::phi_power_poly(u.gamma, {1.0, 1.0}));
}

TEST(RadialRule, IntegratesSingularWeight) {
  for (double g : {0.3, 0.6, 0.25}) {
    const RadialRule r = make_radial_rule(g, 64);
    // ∫ (1-x)^{-γ} x^m dx = B(m+1, 1-γ)
    for (int m : {0, 2, 5}) {
      const double want = std::tgamma(m + 1.0) * std::tgamma(1 - g) / std::tgamma(m + 2 - g);
      EXPECT_NEAR(r.integrate([m](double phi) { return std::pow(1 - phi, m); }), want, 1e-13 * want);
    }
  }
  EXPECT_EQ(make_radial_rule(0.3).p, 10);
}

TEST(RadialOperator, AnnihilatesExactSolution) {
  for (double g : {0.3, 0.6})
    for (BiDegree bd : {BiDegree{0, 0}, BiDegree{1, 0}, BiDegree{2, 1}}) {
      const RadialTestFunction u = RadialTestFunction::exact_solution(kN, g, bd, 1.0);
      const RadialProfile L = radial_L2k_ball(u);
      for (int i = 0; i <= 99; ++i) EXPECT_NEAR(L(0.01 * i), 0.0, 1e-8);
    }
}

TEST(RadialOperator, LadderMatchesConjugatedProduct) {
  for (double g : {0.3, 0.6, 1.25}) {
    const BiDegree bd{1, 2};
    const RadialTestFunction u = RadialTestFunction::with_profile(
        kN, g, bd, RadialProfile::phi_power_poly(0.0, {1.0, -0.3, 0.5}) + RadialProfile::phi_power_poly(g, {0.2}));
    const RadialProfile a = radial_L2k_ball(u), b = radial_L2k_ball_conjugated(u);
    for (int i = 0; i <= 90; ++i) {
      const double x = 0.01 * i;
      EXPECT_NEAR(a(x), b(x), 1e-9 * (1.0 + std::fabs(a(x)))) << g << " x=" << x;
    }
  }
}

TEST(BoundaryValues, ReadOff) {
  for (double g : {0.3, 0.6}) {
    const BoundaryValues one =
        radial_boundary_values(RadialTestFunction::with_profile(kN, g, {1, 0}, RadialProfile::constant(1.0)));
    EXPECT_NEAR(one.B.at("B_0"), 1.0, 1e-9);
    EXPECT_NEAR(one.B.at("B_2g"), 0.0, 1e-9);
    EXPECT_LE(one.condition, 1e10);
    const BoundaryValues fr = radial_boundary_values(
        RadialTestFunction::with_profile(kN, g, {1, 0}, RadialProfile::phi_power_poly(g, {1.0})));
    EXPECT_NEAR(fr.coef_frac[0], 1.0, 1e-9);
    EXPECT_NEAR(fr.B.at("B_0"), 0.0, 1e-9);
    EXPECT_NEAR(fr.B.at("B_2g"), std::pow(2.0, -g), 1e-9);
  }
}

TEST(BoundaryValues, ScatteringRelation) {
  // B_{2γ} = 2^{-γ} c_γ^{-1} λ_γ B_0 on kernel elements.
  for (double g : {0.3, 0.6})
    for (BiDegree bd : {BiDegree{0, 0}, BiDegree{1, 1}, BiDegree{2, 1}}) {
      const BoundaryValues v = radial_boundary_values(RadialTestFunction::exact_solution(kN, g, bd, 1.0));
      const double lam = p_gamma_sphere_eigenvalue(g, bd, kN);
      const double want = std::pow(2.0, -g) / c_gamma(g) * lam * v.B.at("B_0");
      EXPECT_NEAR(v.B.at("B_2g") / want, 1.0, 1e-6) << g << bd.j << bd.k;
      // The uncorrected 2-power 2^{γ} c_{-γ}^{-1} does not fit.
      EXPECT_GT(std::fabs(v.B.at("B_2g") / (std::pow(2.0, g) / c_gamma(-g) * lam) - 1.0), 0.05);
    }
}

TEST(BoundaryValues, IllConditionedFitThrows) {
  const auto u = RadialTestFunction::with_profile(kN, 0.001, {0, 0}, RadialProfile::constant(1.0));
  EXPECT_THROW(radial_boundary_values(u), ConvergenceError);
}

TEST(Energy, ExactSolutionHasZeroGap) {
  for (double g : {0.3, 0.6})
    for (BiDegree bd : {BiDegree{0, 0}, BiDegree{2, 1}}) {
      const EnergyReport e = energy(RadialTestFunction::exact_solution(kN, g, bd, 1.0));
      EXPECT_NEAR(e.gap, 0.0, 1e-8 * std::max(1.0, std::fabs(e.bulk)));
      EXPECT_LT(e.identity_defect(), 1e-6);
      EXPECT_NEAR(e.energy(), e.lower_bound(), 1e-6 * std::max(1.0, std::fabs(e.lower_bound())));
      EXPECT_GT(e.lower_bound(), 0.0);
    }
}

TEST(Energy, PerturbationRaisesEnergy) {
  for (double g : {0.3, 0.6})
    for (double eps : {1e-2, 0.1}) {
      const RadialTestFunction ex = RadialTestFunction::exact_solution(kN, g, {1, 0}, 1.0);
      const RadialTestFunction p = RadialTestFunction::with_profile(
          kN, g, {1, 0}, ex.profile + eps * RadialProfile::phi_power_poly(1.0, {1.0, 1.0}));
      const EnergyReport e = energy(p);
      EXPECT_GT(e.gap, 0.0);
      EXPECT_LT(e.identity_defect(), 1e-6);
      EXPECT_GE(e.energy(), e.lower_bound());
      // Same boundary data: the gap is quadratic in ε.
      const RadialTestFunction p2 = RadialTestFunction::with_profile(
          kN, g, {1, 0}, ex.profile + 2 * eps * RadialProfile::phi_power_poly(1.0, {1.0, 1.0}));
      EXPECT_NEAR(energy(p2).gap / e.gap, 4.0, 1e-4);
    }
}

TEST(Energy, ZeroBoundaryData) {
  const RadialTestFunction z =
      RadialTestFunction::with_profile(kN, 0.3, {1, 0}, RadialProfile::phi_power_poly(3.0, {1.0, -0.5}));
  const EnergyReport e = energy(z);
  EXPECT_NEAR(e.lower_bound(), 0.0, 1e-12);
  EXPECT_NEAR(e.energy(), e.bulk, 1e-12);
  EXPECT_NEAR(e.gap, e.bulk, 1e-10 * e.bulk);
  EXPECT_GT(e.gap, 0.0);
}

TEST(DirichletForm, SymmetricAndConsistentWithEnergy) {
  for (double g : {0.3, 0.6}) {
    const RadialTestFunction ex = RadialTestFunction::exact_solution(kN, g, {2, 1}, 1.0);
    const RadialTestFunction p = bumped(ex, 0.2);
    const double q = dirichlet_form(ex, p);
    EXPECT_LT(symmetry_check(ex, p), 1e-8 * (1.0 + std::fabs(q)));
    EXPECT_NEAR(dirichlet_form(p, p), energy(p).energy(), 1e-8 * (1.0 + std::fabs(q)));
  }
}

TEST(GreenIdentity, FiniteAndLimitForms) {
  for (double g : {0.3, 0.6}) {
    const RadialTestFunction ex = RadialTestFunction::exact_solution(kN, g, {1, 0}, 1.0);
    const RadialTestFunction p = bumped(ex, 0.1);
    for (double x1 : {0.5, 0.9, 0.99}) {
      const GreenFluxCheck c = green_flux_check(ex, p, x1);
      EXPECT_LT(c.defect, 1e-7 * (1.0 + std::fabs(c.flux))) << x1;
    }
    const GreenFluxCheck lim = green_flux_limit_check(ex, p);
    EXPECT_GT(std::fabs(lim.flux), 1e-3);
    EXPECT_LT(lim.defect, 1e-7 * (1.0 + std::fabs(lim.flux)));
  }
}

TEST(Minimization, ExactSolutionIsMinimal) {
  const double g = 0.3;
  const RadialTestFunction ex = RadialTestFunction::exact_solution(kN, g, {1, 0}, 1.0);
  const std::vector<RadialProfile> bumps{RadialProfile::phi_power_poly(1.0, {1.0}),
                                         RadialProfile::phi_power_poly(2.0, {0.0, 1.0}),
                                         RadialProfile::phi_power_poly(1.0 + g, {1.0})};
  const MinimizationCheck m = minimization_check(ex, bumps, 1e-2);
  EXPECT_TRUE(m.minimized_at_zero);
  EXPECT_EQ(m.min_energy, m.e0);
  for (double d : m.gradient) EXPECT_NEAR(d, 0.0, 1e-8);
}

TEST(TraceSecondOrder, PureKernelIdentity) {
  // k = 2 on a single kernel branch.
  for (double g : {1.25, 1.5}) {
    const EnergyReport e = energy(RadialTestFunction::exact_solution(kN, g, {1, 0}, 1.0));
    EXPECT_LT(e.identity_defect(), 1e-5) << g;
  }
}

TEST(TraceInputs, Validation) {
  EXPECT_THROW(RadialTestFunction::exact_solution(kN, 2.0, {0, 0}), DomainError);
  EXPECT_THROW(RadialTestFunction::exact_solution(kN, 0.0, {0, 0}), DomainError);
  EXPECT_THROW(RadialTestFunction::exact_solution(kN, M_PI / 10, {0, 0}), DomainError);
  EXPECT_THROW(kernel_profile(kN, 0.3, {0, 0}, 1), DomainError);
}

}  // namespace
}  // namespace crtrace
