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

#include "crtrace/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "crtrace/errors.hpp"
#include "crtrace/special_fn.hpp"

namespace crtrace {

double Rule::integrate(const std::function<double(double)>& f) const {
  long double s = 0.0L;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(x[i]);
  return static_cast<double>(s);
}

Rule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw DomainError("gauss_jacobi: need at least one node");
  if (alpha <= -1.0 || beta <= -1.0) throw DomainError("gauss_jacobi: alpha, beta must exceed -1");
  const double ab = alpha + beta;

  // Golub–Welsch for starting values.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double s = 2.0 * i + ab;
    J(i, i) = (i == 0) ? (beta - alpha) / (ab + 2.0)
                       : (beta * beta - alpha * alpha) / (s * (s + 2.0));
    if (i > 0) {
      const double k = i;
      const double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
      const double den = s * s * (s + 1.0) * (s - 1.0);
      J(i, i - 1) = J(i - 1, i) = std::sqrt(num / den);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  // Γ(n+α+1)Γ(n+β+1) / (Γ(n+α+β+1) n!) · 2^{α+β+1}
  const double log_c = std::lgamma(n + alpha + 1.0) + std::lgamma(n + beta + 1.0) -
                       std::lgamma(n + ab + 1.0) - std::lgamma(n + 1.0) + (ab + 1.0) * std::log(2.0);
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i);
    for (int it = 0; it < 6; ++it) {
      const double p = jacobi_poly(n, alpha, beta, x);
      const double dp = jacobi_poly_derivative(n, alpha, beta, x);
      const double dx = p / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    const double dp = jacobi_poly_derivative(n, alpha, beta, x);
    r.x[i] = x;
    r.w[i] = std::exp(log_c) / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

Rule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

Rule map_rule(const Rule& r, double a, double b) {
  Rule out;
  out.x.resize(r.size());
  out.w.resize(r.size());
  const double h = 0.5 * (b - a);
  for (std::size_t i = 0; i < r.size(); ++i) {
    out.x[i] = a + h * (r.x[i] + 1.0);
    out.w[i] = h * r.w[i];
  }
  return out;
}

Rule graded_rule(double a, double b, bool toward_b, int layers, double ratio, int nodes_per_panel) {
  const Rule base = gauss_legendre(nodes_per_panel);
  const double len = b - a;
  std::vector<double> d;  // distances from the accumulation end, decreasing
  for (int l = 0; l <= layers; ++l) d.push_back(len * std::pow(ratio, l));
  d.push_back(0.0);
  Rule out;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    const double lo = toward_b ? b - d[i] : a + d[i + 1];
    const double hi = toward_b ? b - d[i + 1] : a + d[i];
    const Rule p = map_rule(base, lo, hi);
    out.x.insert(out.x.end(), p.x.begin(), p.x.end());
    out.w.insert(out.w.end(), p.w.begin(), p.w.end());
  }
  return out;
}

}  // namespace crtrace
