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

#include <map>
#include <string>
#include <vector>

#include "crtrace/harmonics.hpp"
#include "crtrace/quadrature.hpp"
#include "crtrace/radial.hpp"

namespace crtrace {

// u = g(r²) r^{j+k} Y_{j,k} on the unit ball of ℂ^{n+1}, in the energy
// setting of order 2γ with k = ⌊γ⌋+1 ∈ {1,2}. γ must be a rational with
// denominator <= 1000 (it fixes the endpoint substitution of the radial rule).
struct RadialTestFunction {
  RadialProfile profile;
  BiDegree bd;
  int n = 1;
  double gamma = 0.3;

  int k() const;
  double frac() const;
  void validate() const;

  // Kernel element of L_{2k,B} with B_0 = b0 and, for k = 2, B_{2[γ]}
  // determined by the (1-x)^{[γ]} coefficient b_frac.
  static RadialTestFunction exact_solution(int n, double gamma, BiDegree bd, double b0 = 1.0,
                                           double b_frac = 0.0);
  static RadialTestFunction with_profile(int n, double gamma, BiDegree bd, RadialProfile g);
};

// The two normalized kernel profiles: index 0 has boundary value 1 and no
// (1-x)^{[γ]} term; index 1 (k = 2 only) has boundary value 0 and
// (1-x)^{[γ]} coefficient 1.
RadialProfile kernel_profile(int n, double gamma, BiDegree bd, int index);

// Hypergeometric operator x(1-x)g'' + (C-(A+B+1)x)g' - AB g, with jets.
RadialProfile hypergeometric_operator(const RadialProfile& g, double A, double B, double C);

// L_{2k,B} acting on the profile (the r^{j+k}Y factor is divided out), via
// the hypergeometric ladder -4H (k=1) and 16 H'∘H (k=2).
RadialProfile radial_L2k_ball(const RadialTestFunction& u);
// Same operator through the conjugated product of D_{s-i,B} with
// Δ_B = 4(1-x)H_{j,k}; no cancellation control, interior use only.
RadialProfile radial_L2k_ball_conjugated(const RadialTestFunction& u);

// ∫_0^1 F(x) (1-x)^{-[γ]} dx via x = 1 - t^p (p = denominator of [γ]) and
// Gauss–Jacobi in t with weight t^{p(1-[γ])-1}. Nodes are stored in
// phi = 1 - x so the boundary layer never rounds.
struct RadialRule {
  std::vector<double> phi;
  std::vector<double> w;
  int p = 1;

  double integrate(const std::function<double(double phi)>& f) const;
};
RadialRule make_radial_rule(double gamma, int nodes = 256);

struct BoundaryValues {
  std::vector<double> coef;       // coefficient of (1-x)^m
  std::vector<double> coef_frac;  // coefficient of (1-x)^{[γ]+m}
  double condition = 0.0;
  // "B_0", "B_2[g]" (k=2), "B_2" (k=2), "B_2g": 2^{-α/2} × coefficient of
  // (1-x)^{α/2}.
  std::map<std::string, double> B;
};

// Collocation fit of the two-branch expansion on r² ∈ [0.9, 0.999] with
// 6 + 6 basis functions; ConvergenceError if the scaled collocation matrix
// has condition number above 1e10.
BoundaryValues radial_boundary_values(const RadialTestFunction& u);

struct EnergyReport {
  double bulk = 0.0;
  std::vector<double> boundary_cross;
  std::vector<double> boundary_spectral;
  double gap = 0.0;

  double energy() const;        // bulk - Σ cross
  double lower_bound() const;   // Σ spectral
  double identity_defect() const;  // |energy - gap - Σ spectral| / scale
};

// All quantities per unit ∫|Y|² dS (Euclidean surface measure); boundary
// terms carry the factor 2 = mass of |2J_∂C| dz dt relative to dS.
EnergyReport energy(const RadialTestFunction& u, int nodes = 256);

// Q_{2γ,B}(u, v), radially reduced with the same normalization as energy().
double dirichlet_form(const RadialTestFunction& u, const RadialTestFunction& v, int nodes = 256);
// |Q(u,v) - Q(v,u)|
double symmetry_check(const RadialTestFunction& u, const RadialTestFunction& v, int nodes = 256);

struct GreenFluxCheck {
  double volume = 0.0;       // ∫_0^{x1} (a w H[b] - b w H[a]) dx
  double flux = 0.0;         // p (a b' - b a') at x1 (or its limit)
  double defect = 0.0;
};
// Finite form on [0, x1] with weight w = x^m (1-x)^{-γ}, p = x^{m+1}(1-x)^{1-γ}
// (m = j+k+n), H = H_{a+j,a+k;m+1}; k = 1 setting.
GreenFluxCheck green_flux_check(const RadialTestFunction& a, const RadialTestFunction& b,
                                double x1);
// Limit x1 -> 1 with the flux -γ(f_a β_b - f_b β_a) from the boundary fits.
GreenFluxCheck green_flux_limit_check(const RadialTestFunction& a, const RadialTestFunction& b);

struct MinimizationCheck {
  double e0 = 0.0;
  double min_energy = 0.0;
  std::vector<double> argmin;     // grid point with smallest energy
  std::vector<double> gradient;   // central-difference gradient at 0
  bool minimized_at_zero = false;
};
// E(u + Σ ε_i bump_i) on the grid {-h, 0, h}^m.
MinimizationCheck minimization_check(const RadialTestFunction& u,
                                     const std::vector<RadialProfile>& bumps, double h);

}  // namespace crtrace
