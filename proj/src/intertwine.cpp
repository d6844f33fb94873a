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

#include "crtrace/intertwine.hpp"

#include <cmath>
#include <string>

#include "crtrace/errors.hpp"
#include "crtrace/special_fn.hpp"

namespace crtrace {

GammaDecomp GammaDecomp::make(double gamma, int n) {
  if (!(gamma > 0.0)) throw DomainError("GammaDecomp: gamma must be positive");
  const double f = std::floor(gamma);
  if (gamma - f < 1e-12 || f + 1.0 - gamma < 1e-12) {
    throw DomainError("GammaDecomp: gamma must not be an integer");
  }
  GammaDecomp g;
  g.gamma = gamma;
  g.floor = static_cast<int>(f);
  g.frac = gamma - f;
  g.k = g.floor + 1;
  g.n = n;
  g.s = 0.5 * (n + 1 + gamma);
  return g;
}

double c_gamma(double gamma) {
  if (std::fabs(gamma - std::round(gamma)) < 1e-12) {
    throw DomainError("c_gamma: pole at integer gamma = " + std::to_string(gamma));
  }
  const LogGamma a = log_gamma(gamma), b = log_gamma(-gamma);
  return std::pow(2.0, gamma) * a.sign * b.sign * std::exp(a.value - b.value);
}

double p_gamma_sphere_eigenvalue(double gamma, BiDegree bd, int n) {
  if (!(gamma > 0.0 && gamma < n + 1)) throw DomainError("p_gamma: gamma outside (0, n+1)");
  const double up = 0.5 * (n + 1 + gamma), dn = 0.5 * (n + 1 - gamma);
  return std::pow(2.0, gamma) * gamma_ratio(up + bd.j, dn + bd.j) * gamma_ratio(up + bd.k, dn + bd.k);
}

SpectralCoeffs apply_p_gamma(const SpectralCoeffs& f, double gamma, int n) {
  SpectralCoeffs out;
  for (const auto& [bd, c] : f) out[bd] = c * p_gamma_sphere_eigenvalue(gamma, bd, n);
  return out;
}

double p_gamma_heisenberg_symbol(double gamma, double lambda, double tau_abs) {
  if (!(tau_abs > 0.0)) throw DomainError("heisenberg symbol: |tau| must be positive");
  const double x = lambda / (2.0 * tau_abs);
  const double top = 0.5 * (1.0 + gamma) + x, bot = 0.5 * (1.0 - gamma) + x;
  if (is_nonpositive_integer(bot) || is_nonpositive_integer(top)) {
    throw DomainError("heisenberg symbol: Gamma argument at a pole");
  }
  return std::pow(2.0 * tau_abs, gamma) * gamma_ratio(top, bot);
}

}  // namespace crtrace
