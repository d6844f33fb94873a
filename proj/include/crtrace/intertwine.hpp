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

#include "crtrace/harmonics.hpp"

namespace crtrace {

// γ split into integer and fractional parts, with k = ⌊γ⌋ + 1 and
// s = (n+1+γ)/2 for ambient complex dimension n+1.
struct GammaDecomp {
  double gamma = 0.0;
  int floor = 0;
  double frac = 0.0;
  int k = 1;
  double s = 0.0;
  int n = 1;

  static GammaDecomp make(double gamma, int n);
};

using SpectralCoeffs = std::map<BiDegree, cplx>;

// c_γ = 2^γ Γ(γ)/Γ(-γ)
double c_gamma(double gamma);

// Eigenvalue of the order-γ intertwining operator on H_{j,k} of S^{2n+1}.
double p_gamma_sphere_eigenvalue(double gamma, BiDegree bd, int n);

SpectralCoeffs apply_p_gamma(const SpectralCoeffs& f, double gamma, int n);

// Joint spectral symbol on the Heisenberg group; lambda is the spectral value
// of -Δ_b and tau_abs that of |T|.
double p_gamma_heisenberg_symbol(double gamma, double lambda, double tau_abs);

}  // namespace crtrace
