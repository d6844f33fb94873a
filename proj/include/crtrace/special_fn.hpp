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

#include <gmpxx.h>

namespace crtrace {

struct LogGamma {
  double value;  // ln|Γ(x)|
  int sign;      // sign of Γ(x)
};

// True if x is 0, -1, -2, ... (to within a few ulps).
bool is_nonpositive_integer(double x);

LogGamma log_gamma(double x);

// Γ(x); throws DomainError at poles.
double gamma_fn(double x);

// 1/Γ(x), which is entire: returns exactly 0 at the poles of Γ.
double rgamma(double x);

// Γ(a)/Γ(b). Integer offsets a - b are evaluated as Pochhammer products,
// which also resolves ratios where one or both arguments sit at poles.
double gamma_ratio(double a, double b);

double pochhammer(double a, int k);
mpq_class pochhammer(const mpq_class& a, int k);

struct HypParams {
  double a, b, c, z;
};

// Gauss hypergeometric 2F1(a, b; c; z) for z in [0, 1].
double hyp2f1(const HypParams& p);
inline double hyp2f1(double a, double b, double c, double z) { return hyp2f1({a, b, c, z}); }

// 2F1(a, b; c; 1 - w), accurate for small w > 0 through the z -> 1
// connection formula (the argument never passes through the rounded 1 - w).
double hyp2f1_complement(double a, double b, double c, double w);

// d^k/dz^k 2F1(a, b; c; z) = (a)_k (b)_k / (c)_k * 2F1(a+k, b+k; c+k; z).
double hyp2f1_derivative(const HypParams& p, int order);

// Plain power series, no transformations; used as an oracle and internally.
double hyp2f1_series(double a, double b, double c, double z);

// Jacobi polynomial P_m^{(alpha, beta)}(t) by the three-term recurrence.
double jacobi_poly(int m, double alpha, double beta, double t);
double jacobi_poly_derivative(int m, double alpha, double beta, double t);

struct IdentityPair {
  double lhs;
  double rhs;
};

// lhs: ∫_{-π}^{π} (1 - 2r cos θ + r²)^{-s} e^{idθ} dθ (trapezoid, 2048 nodes);
// rhs: the closed series in r.
IdentityPair cosine_integral_pair(double r, double s, int d);

// lhs: ∫_{-1}^{1} (1-t)^{n-1} (1+t)^{d+mu} P_m^{(n-1,d)}(t) dt by Gauss-Legendre;
// rhs: the closed form (zero when mu < m).
IdentityPair jacobi_integral_pair(int n, int d, int mu, int m);

}  // namespace crtrace
