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
#include "crtrace/scatter.hpp"

namespace crtrace {
namespace {

// Direct Gauss series, summed in long double.
double series_2f1(double a, double b, double c, double x, int terms) {
  long double t = 1.0L, s = 1.0L;
  for (int m = 0; m < terms; ++m) {
    t *= (a + m) * (b + m) / ((c + m) * (m + 1.0L)) * x;
    s += t;
  }
  return static_cast<double>(s);
}

TEST(PhiJK, EndpointsAndSeries) {
  for (int n : {1, 2})
    for (double g : {0.25, 0.6})
      for (int j = 0; j <= 3; ++j)
        for (int k = 0; k <= 3; ++k) {
          const ScatterParams p{n, g};
          const BiDegree bd{j, k};
          const double s = p.s();
          EXPECT_NEAR(phi_jk(1.0, bd, p), 1.0, 1e-10);
          EXPECT_NEAR(phi_jk(0.0, bd, p), phi_jk_coefficient(bd, p), 1e-14);
          const double A = phi_jk_coefficient(bd, p);
          const double want = A * series_2f1(j + n + 1 - s, k + n + 1 - s, j + k + n + 1.0, 0.3, 60);
          EXPECT_NEAR(phi_jk(0.3, bd, p), want, 1e-13 * std::fabs(want));
        }
}

TEST(PhiJK, Positive) {
  const ScatterParams p{1, 0.4};
  for (int j = 0; j <= 6; ++j)
    for (int k = 0; k <= 6; ++k)
      for (double x = 0.0; x <= 1.0; x += 0.05) EXPECT_GT(phi_jk(x, {j, k}, p), 0.0);
  EXPECT_THROW(phi_jk(1.5, {0, 0}, p), DomainError);
  EXPECT_THROW(phi_jk(0.5, {0, 0}, ScatterParams{1, 1.0}), DomainError);
}

TEST(Poisson, ConstantAtCentre) {
  const ScatterParams p{1, 0.3};
  const SphereQuadrature q = poisson_quadrature(1);
  const cplx u = poisson_integral([](const SpherePoint&) { return cplx(1.0); }, {0.0, 0.0}, p, q);
  const double s = p.s();
  const double want = std::tgamma(s) * std::tgamma(s) / (std::tgamma(2.0) * std::tgamma(2 * p.gamma));
  EXPECT_NEAR(u.real(), want, 1e-12);
  EXPECT_NEAR(u.imag(), 0.0, 1e-14);
  EXPECT_THROW(poisson_integral([](const SpherePoint&) { return cplx(1.0); }, {1.0, 0.0}, p, q),
               DomainError);
}

TEST(Poisson, MatchesSeries) {
  const SphereQuadrature q = poisson_quadrature(1);
  for (double g : {0.25, 0.7}) {
    const ScatterParams p{1, g};
    for (BiDegree bd : {BiDegree{0, 0}, BiDegree{1, 0}, BiDegree{2, 1}}) {
      const MonomialHarmonic Y = canonical_harmonic(bd);
      for (const SpherePoint& w : sample_ball_points(1, 5, 0.8, 99)) {
        const cplx a = poisson_integral(Y, w, p, q);
        const cplx b = scattering_series({{bd, cplx(1.0)}}, w, p);
        EXPECT_NEAR(std::abs(a - b), 0.0, 1e-9);
      }
    }
  }
}

TEST(Poisson, BoundaryLimit) {
  const ScatterParams p{1, 0.3};
  const SpectralCoeffs f{{{1, 0}, cplx(1.0)}, {{0, 2}, cplx(0.5, 0.5)}};
  const double r = 1.0 - 1e-9;
  const SpherePoint w{cplx(0.6 * r), cplx(0.0, 0.8 * r)};
  const double phi = 1.0 - r * r;
  const cplx u = scattering_series(f, w, p) / std::pow(phi, p.n + 1 - p.s());
  // The G-branch correction is of size φ^{2γ}.
  EXPECT_LT(std::abs(u - scattering_boundary_F(f, w)), 10.0 * std::pow(phi, 2 * p.gamma));
}

TEST(PdeResidual, ExactProfileAndControls) {
  std::vector<double> grid;
  for (int i = 0; i <= 99; ++i) grid.push_back(0.01 * i);
  for (double g : {0.25, 0.7}) {
    const ScatterParams p{2, g};
    const double s = p.s();
    const RadialProfile lead = RadialProfile::phi_power_poly(p.n + 1 - s, {1.0});
    for (BiDegree bd : {BiDegree{0, 0}, BiDegree{3, 1}}) {
      for (double r : pde_residual_radial(lead * phi_jk_profile(bd, p), bd, p, grid)) EXPECT_NEAR(r, 0.0, 1e-9);
    }
    for (double r : pde_residual_radial(RadialProfile::constant(1.0), {0, 0}, p, grid))
      EXPECT_NEAR(r, -s * (p.n + 1 - s), 1e-14);
    const BiDegree bd{1, 1};
    const RadialProfile base = lead * phi_jk_profile(bd, p);
    const RadialProfile x2 = RadialProfile::phi_power_poly(0.0, {0.0, 0.0, 1.0});
    const auto r1 = pde_residual_radial(base + 1e-3 * x2, bd, p, grid);
    const auto r2 = pde_residual_radial(base + 2e-3 * x2, bd, p, grid);
    double peak = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      EXPECT_NEAR(r2[i], 2.0 * r1[i], 1e-9);
      peak = std::max(peak, std::fabs(r1[i]));
    }
    EXPECT_GT(peak, 1e-4);
  }
}

TEST(SplitFG, Limits) {
  for (int n : {1, 2})
    for (double g : {0.3, 0.7})
      for (int j = 0; j <= 3; ++j)
        for (int k = 0; k <= 3; ++k) {
          const ScatterParams p{n, g};
          const BiDegree bd{j, k};
          const FGLimits fg = split_FG(bd, p);
          EXPECT_NEAR(fg.F_limit, 1.0, 1e-12);
          EXPECT_EQ(fg.G_limit < 0.0, c_gamma(2 * g) < 0.0);
          const double e = p_gamma_sphere_eigenvalue(2 * g, bd, n);
          EXPECT_NEAR(fg.G_limit * c_gamma(2 * g) / e, 1.0, 1e-10) << n << g << j << k;
        }
  EXPECT_THROW(split_FG({0, 0}, ScatterParams{1, 0.5}), DomainError);
}

}  // namespace
}  // namespace crtrace
