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

#pragma once

#include <cstdint>
#include <vector>

#include "crtrace/harmonics.hpp"
#include "crtrace/intertwine.hpp"
#include "crtrace/radial.hpp"

namespace crtrace {

// Scattering problem Δ_B u + 4s(n+1-s) u = 0 on the ball with s = (n+1)/2 + γ;
// the boundary scattering operator then has order 2γ.
struct ScatterParams {
  int n = 1;
  double gamma = 0.25;

  double s() const { return 0.5 * (n + 1) + gamma; }
  void validate() const;
};

// Canonical generator Y_{j,k}(w) = w_0^j conj(w_1)^k.
MonomialHarmonic canonical_harmonic(BiDegree bd);

// Γ(j+s)Γ(k+s)/(Γ(j+k+n+1)Γ(2γ)), the value of φ_{j,k} at x = 0.
double phi_jk_coefficient(BiDegree bd, const ScatterParams& p);

double phi_jk(double x, BiDegree bd, const ScatterParams& p);
double phi_jk_derivative(double x, BiDegree bd, const ScatterParams& p, int order);
// Analytic-jet profile of φ_{j,k}.
RadialProfile phi_jk_profile(BiDegree bd, const ScatterParams& p);

cplx poisson_integral(const SphereFunction& f, const SpherePoint& w, const ScatterParams& p,
                      const SphereQuadrature& quad);

// φ^{n+1-s} Σ c_{jk} φ_{j,k}(r^2) Y_{j,k}(w) with canonical harmonics;
// vanishes on the sphere, where scattering_boundary_F gives the F-part.
cplx scattering_series(const SpectralCoeffs& coeffs, const SpherePoint& w, const ScatterParams& p);
cplx scattering_boundary_F(const SpectralCoeffs& coeffs, const SpherePoint& w);

// Residual of Δ_φ u - s(n+1-s) u for u = g(r^2) r^{j+k} Y_{j,k}, divided by
// r^{j+k} Y_{j,k}.
// Deterministic rule for poisson_integral: the kernel peaks along the pole
// direction with width ~ (1-|w|), so the polar coordinate gets 8x the
// resolution of the rest.
SphereQuadrature poisson_quadrature(int n, int resolution = 24);

// Points uniform in the ball of radius rmax in ℂ^{n+1}, from a fixed seed.
std::vector<SpherePoint> sample_ball_points(int n, int count, double rmax, std::uint64_t seed);

std::vector<double> pde_residual_radial(const RadialProfile& g, BiDegree bd, const ScatterParams& p,
                                        const std::vector<double>& x_grid);

struct FGLimits {
  double F_limit;
  double G_limit;
};

// Boundary values of F and G in u = φ^{n+1-s} F + φ^s G for boundary data
// Y_{j,k}, from the z -> 1 connection formula.
FGLimits split_FG(BiDegree bd, const ScatterParams& p);

}  // namespace crtrace
