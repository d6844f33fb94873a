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

#include <complex>
#include <functional>
#include <vector>

namespace crtrace {

using cplx = std::complex<double>;

// Point (z_1..z_n, z_{n+1}) of the Siegel domain q = Im z_{n+1} - |z|^2 >= 0.
struct SiegelPoint {
  std::vector<cplx> z;
  cplx zn1;

  int n() const { return static_cast<int>(z.size()); }
  double zsq() const;   // Σ|z_j|^2
  double q() const;     // defining function
  double rho() const;   // sqrt(2q)
  double t() const { return zn1.real(); }

  // Interior point from horizontal coordinates and height q.
  static SiegelPoint from_coords(const std::vector<cplx>& z, double t, double q);
};

// Point of the closed unit ball in C^{n+1}.
struct BallPoint {
  std::vector<cplx> w;

  double norm2() const;
  double phi() const { return 1.0 - norm2(); }
};

BallPoint cayley(const SiegelPoint& p);
SiegelPoint cayley_inverse(const BallPoint& p);

// |J_C| = 4^{n+1} / (t^2 + (1 + q + |z|^2)^2)^{n+2}
double jacobian_interior(const SiegelPoint& p);

// |J_∂C| = 2^{2n+1} / (t^2 + (1 + |z|^2)^2)^{n+1}
double jacobian_boundary(const std::vector<cplx>& z, double t);

// Boundary point (z, t + i|z|^2) of the Siegel domain.
SiegelPoint heisenberg_boundary_point(const std::vector<cplx>& z, double t);

// The boundary Cayley map ∂C on the Heisenberg group.
BallPoint boundary_cayley(const std::vector<cplx>& z, double t);

// ∫_{H^1} f(∂C(z,t)) |J_∂C|(z,t) dz dt for n = 1, on the full group via
// t = (1+|z|^2) tan ψ, |z| = tan χ (the integrand is then smooth).
double heisenberg_pullback_integral_n1(const std::function<double(const BallPoint&)>& f,
                                       int nodes = 96);

// Surface Jacobian of ∂C for n = 1 computed by finite differences of the
// embedding R^3 -> S^3 ⊂ R^4 (Gram determinant); an oracle for |J_∂C|.
double boundary_surface_jacobian_fd_n1(cplx z, double t, double h = 1e-5);

}  // namespace crtrace
