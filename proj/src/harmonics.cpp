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

#include "crtrace/harmonics.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>

#include "crtrace/errors.hpp"
#include "crtrace/quadrature.hpp"
#include "crtrace/special_fn.hpp"

namespace crtrace {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss–Jacobi on [0,1] for the density (n_rest)(1-u)^{n_rest-1}, weights
// normalized to sum one.
Rule beta_rule(int nodes, int n_rest) {
  Rule r = map_rule(gauss_jacobi(nodes, n_rest - 1.0, 0.0), 0.0, 1.0);
  double s = 0.0;
  for (double w : r.w) s += w;
  for (double& w : r.w) w /= s;
  return r;
}

SphereQuadrature product_rule(int n, const std::vector<int>& angles, const std::vector<int>& sticks) {
  SphereQuadrature q;
  q.n = n;
  std::vector<Rule> u;
  for (int i = 0; i < n; ++i) u.push_back(beta_rule(sticks[i], n - i));

  std::vector<double> x(n + 1);
  std::vector<int> ui(n, 0);
  // Enumerate the simplex part.
  std::vector<std::pair<std::vector<double>, double>> simplex;
  std::function<void(int, double, double)> rec = [&](int i, double rest, double wt) {
    if (i == n) {
      x[n] = rest;
      simplex.emplace_back(x, wt);
      return;
    }
    for (std::size_t a = 0; a < u[i].size(); ++a) {
      x[i] = rest * u[i].x[a];
      rec(i + 1, rest * (1.0 - u[i].x[a]), wt * u[i].w[a]);
    }
  };
  rec(0, 1.0, 1.0);

  std::size_t n_ang = 1;
  for (int a = 0; a <= n; ++a) n_ang *= angles[a];
  for (const auto& [xs, wt] : simplex) {
    for (std::size_t idx = 0; idx < n_ang; ++idx) {
      std::size_t rem = idx;
      std::vector<cplx> p(n + 1);
      for (int a = 0; a <= n; ++a) {
        const int m = angles[a];
        const int ia = static_cast<int>(rem % m);
        rem /= m;
        // Offset the angle grid so the pole direction is not a node.
        const double th = 2.0 * kPi * (ia + 0.5) / m;
        p[a] = std::polar(std::sqrt(std::max(0.0, xs[a])), th);
      }
      q.nodes.push_back(std::move(p));
      q.weights.push_back(wt / static_cast<double>(n_ang));
    }
  }
  return q;
}

int stick_nodes(int resolution) { return (resolution / 2 + 2) / 2 + 1; }

}  // namespace

void SphereQuadrature::write_columns(std::ostream& os) const {
  os << std::setprecision(17);
  for (std::size_t i = 0; i < size(); ++i) {
    for (const auto& c : nodes[i]) os << c.real() << ' ' << c.imag() << ' ';
    os << weights[i] << '\n';
  }
}

SphereQuadrature build_quadrature(int n, int resolution, QuadKind kind, std::uint64_t seed) {
  if (n < 0) throw DomainError("build_quadrature: n must be non-negative");
  if (resolution < 1) throw DomainError("build_quadrature: resolution must be positive");
  if (kind == QuadKind::MonteCarlo) {
    SphereQuadrature q;
    q.n = n;
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    q.nodes.reserve(resolution);
    for (int i = 0; i < resolution; ++i) {
      std::vector<cplx> p(n + 1);
      double s = 0.0;
      for (auto& c : p) {
        const double re = g(gen);
        const double im = g(gen);
        c = cplx(re, im);
        s += re * re + im * im;
      }
      s = std::sqrt(s);
      for (auto& c : p) c /= s;
      q.nodes.push_back(std::move(p));
    }
    q.weights.assign(resolution, 1.0 / resolution);
    return q;
  }
  return build_polar_quadrature(n, resolution, resolution);
}

SphereQuadrature build_polar_quadrature(int n, int resolution, int polar_resolution) {
  std::vector<int> angles(n + 1, resolution + 1);
  std::vector<int> sticks(n, stick_nodes(resolution));
  angles[0] = polar_resolution + 1;
  if (n > 0) sticks[0] = stick_nodes(polar_resolution);
  return product_rule(n, angles, sticks);
}

cplx MonomialHarmonic::operator()(const SpherePoint& w) const {
  cplx v = 1.0;
  for (int i = 0; i < bd.j; ++i) v *= w[a];
  const cplx wb = std::conj(w[b]);
  for (int i = 0; i < bd.k; ++i) v *= wb;
  return v;
}

cplx eval_monomial_harmonic(const MonomialHarmonic& h, const SpherePoint& point) {
  return h(point);
}

cplx inner_product(const SphereFunction& f, const SphereFunction& g, const SphereQuadrature& quad) {
  // Pairwise partial sums keep the result independent of traversal chunking.
  std::complex<long double> s = 0.0L;
  for (std::size_t i = 0; i < quad.size(); ++i) {
    const cplx v = f(quad.nodes[i]) * std::conj(g(quad.nodes[i])) * quad.weights[i];
    s += std::complex<long double>(v.real(), v.imag());
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

std::vector<std::vector<cplx>> unitary_with_first_column(const SpherePoint& v) {
  const std::size_t d = v.size();
  std::vector<std::vector<cplx>> cols;
  cols.push_back(v);
  for (std::size_t e = 0; e < d && cols.size() < d; ++e) {
    std::vector<cplx> c(d, 0.0);
    c[e] = 1.0;
    for (const auto& u : cols) {
      cplx dot = 0.0;
      for (std::size_t i = 0; i < d; ++i) dot += std::conj(u[i]) * c[i];
      for (std::size_t i = 0; i < d; ++i) c[i] -= dot * u[i];
    }
    double nrm = 0.0;
    for (const auto& x : c) nrm += std::norm(x);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-8) continue;
    for (auto& x : c) x /= nrm;
    cols.push_back(std::move(c));
  }
  return cols;
}

SpherePoint apply_unitary(const std::vector<std::vector<cplx>>& U, const SpherePoint& x) {
  SpherePoint y(x.size(), 0.0);
  for (std::size_t c = 0; c < U.size(); ++c)
    for (std::size_t r = 0; r < x.size(); ++r) y[r] += U[c][r] * x[c];
  return y;
}

cplx funk_hecke_eigenvalue_quadrature(const DiscKernel& K, BiDegree bd, int n) {
  if (n < 1) throw DomainError("funk_hecke: n must be >= 1");
  const int d = bd.j - bd.k, ad = std::abs(d), m = bd.m();
  const Rule tr = graded_rule(-1.0, 1.0, true, 22, 0.2, 12);
  Rule th = graded_rule(-kPi, 0.0, true, 22, 0.2, 12);
  const Rule th2 = graded_rule(0.0, kPi, false, 22, 0.2, 12);
  th.x.insert(th.x.end(), th2.x.begin(), th2.x.end());
  th.w.insert(th.w.end(), th2.w.begin(), th2.w.end());

  std::complex<long double> outer = 0.0L;
  for (std::size_t a = 0; a < tr.size(); ++a) {
    const double t = tr.x[a];
    const double wt = std::pow(1.0 - t, n - 1) * std::pow(1.0 + t, 0.5 * ad) *
                      jacobi_poly(m, n - 1.0, ad, t);
    if (wt == 0.0) continue;
    const double r = std::sqrt(0.5 * (1.0 + t));
    std::complex<long double> inner = 0.0L;
    for (std::size_t b = 0; b < th.size(); ++b) {
      const cplx v = K(std::polar(r, -th.x[b])) * std::polar(1.0, d * th.x[b]) * th.w[b];
      inner += std::complex<long double>(v.real(), v.imag());
    }
    outer += static_cast<long double>(tr.w[a] * wt) * inner;
  }
  const double C = std::exp(std::lgamma(m + 1.0) + std::lgamma(n + 1.0) - std::lgamma(m + n + 0.0)) /
                   (2.0 * kPi * std::pow(2.0, n + 0.5 * ad));
  return C * cplx(static_cast<double>(outer.real()), static_cast<double>(outer.imag()));
}

double power_kernel_eigenvalue(double alpha, BiDegree bd, int n) {
  if (!(alpha > -1.0 && alpha < 0.5 * (n + 1))) {
    throw DomainError("power_kernel_eigenvalue: alpha outside (-1, (n+1)/2)");
  }
  const double j = bd.j, k = bd.k;
  // Γ(j+α)/Γ(α) = (α)_j keeps α -> 0 finite.
  return std::exp(std::lgamma(n + 1.0)) * gamma_fn(n + 1.0 - 2.0 * alpha) *
         gamma_ratio(j + alpha, alpha) * gamma_ratio(k + alpha, alpha) *
         rgamma(j + n + 1.0 - alpha) * rgamma(k + n + 1.0 - alpha);
}

cplx apply_kernel_at(const DiscKernel& K, const SphereFunction& f, const SpherePoint& zeta, int n,
                     int degree) {
  const auto U = unitary_with_first_column(zeta);
  const Rule xr = graded_rule(0.0, 1.0, true, 16, 0.15, 8);
  Rule th = graded_rule(-kPi, 0.0, true, 16, 0.15, 8);
  const Rule th2 = graded_rule(0.0, kPi, false, 16, 0.15, 8);
  th.x.insert(th.x.end(), th2.x.begin(), th2.x.end());
  th.w.insert(th.w.end(), th2.w.begin(), th2.w.end());
  const SphereQuadrature omega = build_quadrature(n - 1, std::max(degree, 1), QuadKind::Deterministic);

  std::complex<long double> total = 0.0L;
  SpherePoint xi(n + 1);
  for (std::size_t a = 0; a < xr.size(); ++a) {
    const double x = xr.x[a];
    const double wx = xr.w[a] * n * std::pow(1.0 - x, n - 1);
    const double rx = std::sqrt(x), ry = std::sqrt(std::max(0.0, 1.0 - x));
    for (std::size_t b = 0; b < th.size(); ++b) {
      xi[0] = std::polar(rx, th.x[b]);
      const cplx kv = K(std::conj(xi[0]));
      std::complex<long double> ring = 0.0L;
      for (std::size_t c = 0; c < omega.size(); ++c) {
        for (int i = 0; i < n; ++i) xi[i + 1] = ry * omega.nodes[c][i];
        const cplx v = f(apply_unitary(U, xi)) * omega.weights[c];
        ring += std::complex<long double>(v.real(), v.imag());
      }
      const cplx rv(static_cast<double>(ring.real()), static_cast<double>(ring.imag()));
      const cplx contrib = kv * rv * (wx * th.w[b] / (2.0 * kPi));
      total += std::complex<long double>(contrib.real(), contrib.imag());
    }
  }
  return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
}

double sphere_volume(int n) {
  return 2.0 * std::pow(kPi, n + 1) / std::exp(std::lgamma(n + 1.0));
}

}  // namespace crtrace
