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

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include "crtrace/geometry.hpp"

namespace crtrace {

struct BiDegree {
  int j = 0;
  int k = 0;

  int m() const { return j < k ? j : k; }
  auto operator<=>(const BiDegree&) const = default;
};

// Weighted point set on S^{2n+1} ⊂ C^{n+1}; weights sum to one.
struct SphereQuadrature {
  int n = 1;
  std::vector<std::vector<cplx>> nodes;
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  void write_columns(std::ostream& os) const;
};

enum class QuadKind { Deterministic, MonteCarlo };

// Deterministic: product rule in the coordinates w_a = sqrt(x_a) e^{iθ_a}
// (stick-breaking Gauss–Jacobi for x, trapezoid for θ), exact for monomials
// w^α w̄^β of total degree <= resolution. MonteCarlo: `resolution` samples of
// normalized complex Gaussians from a seeded generator.
SphereQuadrature build_quadrature(int n, int resolution, QuadKind kind, std::uint64_t seed = 0);

// Product rule as above but with `polar_resolution` used for the first
// coordinate pair (x_0, θ_0). Useful when the integrand concentrates near
// the pole e_0.
SphereQuadrature build_polar_quadrature(int n, int resolution, int polar_resolution);

using SpherePoint = std::vector<cplx>;
using SphereFunction = std::function<cplx(const SpherePoint&)>;

// w_a^j conj(w_b)^k; harmonic when a != b or one of j, k vanishes.
struct MonomialHarmonic {
  BiDegree bd;
  int a = 0;
  int b = 1;

  cplx operator()(const SpherePoint& w) const;
};

cplx eval_monomial_harmonic(const MonomialHarmonic& h, const SpherePoint& point);

// Σ weights f conj(g).
cplx inner_product(const SphereFunction& f, const SphereFunction& g, const SphereQuadrature& quad);

// Unitary matrix (columns) whose first column is the unit vector v.
std::vector<std::vector<cplx>> unitary_with_first_column(const SpherePoint& v);
SpherePoint apply_unitary(const std::vector<std::vector<cplx>>& U, const SpherePoint& x);

using DiscKernel = std::function<cplx(cplx)>;

// Funk–Hecke eigenvalue of the operator with kernel K(ζ·η̄) on H_{j,k}
// (normalized measure), by nested graded quadrature of the Jacobi/cosine
// reduction. Kernels may be singular at u = 1.
cplx funk_hecke_eigenvalue_quadrature(const DiscKernel& K, BiDegree bd, int n);

// Closed-form eigenvalue of |1 - ζ·η̄|^{-2α} on H_{j,k}.
double power_kernel_eigenvalue(double alpha, BiDegree bd, int n);

// (T_K f)(ζ) = ∫ K(ζ·η̄) f(η) dσ(η) by sphere quadrature in coordinates
// adapted to ζ; f must be a polynomial of degree <= degree.
cplx apply_kernel_at(const DiscKernel& K, const SphereFunction& f, const SpherePoint& zeta, int n,
                     int degree);

// |S^{2n+1}| = 2π^{n+1}/n!
double sphere_volume(int n);

}  // namespace crtrace
