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

#include "crtrace/scatter.hpp"

#include <cmath>
#include <random>

#include "crtrace/errors.hpp"
#include "crtrace/special_fn.hpp"

namespace crtrace {

namespace {

struct HypTriple {
  double a, b, c;
};

HypTriple phi_params(BiDegree bd, const ScatterParams& p) {
  const double s = p.s();
  return {bd.j + p.n + 1 - s, bd.k + p.n + 1 - s, bd.j + bd.k + p.n + 1.0};
}

double log_abs_gamma(double x, int* sign) {
  const LogGamma g = log_gamma(x);
  *sign *= g.sign;
  return g.value;
}

}  // namespace

void ScatterParams::validate() const {
  if (n < 1) throw DomainError("ScatterParams: n must be >= 1");
  if (!(gamma > 0.0 && gamma < 0.5 * (n + 1))) {
    throw DomainError("ScatterParams: gamma outside (0, (n+1)/2)");
  }
}

MonomialHarmonic canonical_harmonic(BiDegree bd) { return MonomialHarmonic{bd, 0, 1}; }

double phi_jk_coefficient(BiDegree bd, const ScatterParams& p) {
  const double s = p.s();
  int sign = 1;
  const double l = log_abs_gamma(bd.j + s, &sign) + log_abs_gamma(bd.k + s, &sign) -
                   log_abs_gamma(bd.j + bd.k + p.n + 1.0, &sign) - log_abs_gamma(2.0 * p.gamma, &sign);
  return sign * std::exp(l);
}

double phi_jk(double x, BiDegree bd, const ScatterParams& p) {
  return phi_jk_derivative(x, bd, p, 0);
}

double phi_jk_derivative(double x, BiDegree bd, const ScatterParams& p, int order) {
  p.validate();
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("phi_jk: x outside [0,1]");
  return phi_jk_profile(bd, p).at_phi(1.0 - x, order);
}

RadialProfile phi_jk_profile(BiDegree bd, const ScatterParams& p) {
  p.validate();
  const HypTriple h = phi_params(bd, p);
  const double A = phi_jk_coefficient(bd, p);
  return RadialProfile(
      [h, A](double phi, int order) {
        const double c = pochhammer(h.a, order) * pochhammer(h.b, order) / pochhammer(h.c, order);
        if (c == 0.0) return 0.0;
        return A * c * hyp2f1_complement(h.a + order, h.b + order, h.c + order, phi);
      },
      16);
}

cplx poisson_integral(const SphereFunction& f, const SpherePoint& w, const ScatterParams& p,
                      const SphereQuadrature& quad) {
  p.validate();
  double r2 = 0.0;
  for (const auto& c : w) r2 += std::norm(c);
  if (!(r2 < 1.0)) throw DomainError("poisson_integral: point must be interior");
  const double r = std::sqrt(r2);
  // Rotate the rule so that w/|w| is the pole e_0; the kernel then depends on
  // the first coordinate of the unrotated node only.
  SpherePoint dir(w.size(), 0.0);
  if (r > 0.0) {
    for (std::size_t i = 0; i < w.size(); ++i) dir[i] = w[i] / r;
  } else {
    dir[0] = 1.0;
  }
  const auto U = unitary_with_first_column(dir);
  const double s = p.s();
  const double phi = 1.0 - r2;
  std::complex<long double> total = 0.0L;
  for (std::size_t i = 0; i < quad.size(); ++i) {
    const SpherePoint& xi = quad.nodes[i];
    const double den = std::norm(1.0 - r * std::conj(xi[0]));
    const double kern = std::pow(phi / den, s);
    const cplx v = kern * f(apply_unitary(U, xi)) * quad.weights[i];
    total += std::complex<long double>(v.real(), v.imag());
  }
  int sign = 1;
  const double lp = 2.0 * log_abs_gamma(s, &sign) - std::lgamma(p.n + 1.0) -
                    log_abs_gamma(2.0 * p.gamma, &sign);
  const double pref = sign * std::exp(lp);
  return pref * cplx(static_cast<double>(total.real()), static_cast<double>(total.imag()));
}

cplx scattering_series(const SpectralCoeffs& coeffs, const SpherePoint& w, const ScatterParams& p) {
  p.validate();
  double r2 = 0.0;
  for (const auto& c : w) r2 += std::norm(c);
  if (r2 > 1.0 + 1e-14) throw DomainError("scattering_series: point outside the ball");
  const double phi = std::max(0.0, 1.0 - r2);
  if (phi == 0.0) return 0.0;
  cplx sum = 0.0;
  for (const auto& [bd, c] : coeffs) {
    sum += c * phi_jk_profile(bd, p).at_phi(phi) * canonical_harmonic(bd)(w);
  }
  return std::pow(phi, p.n + 1 - p.s()) * sum;
}

cplx scattering_boundary_F(const SpectralCoeffs& coeffs, const SpherePoint& w) {
  cplx sum = 0.0;
  for (const auto& [bd, c] : coeffs) sum += c * canonical_harmonic(bd)(w);
  return sum;
}

SphereQuadrature poisson_quadrature(int n, int resolution) {
  return build_polar_quadrature(n, resolution, 8 * resolution);
}

std::vector<SpherePoint> sample_ball_points(int n, int count, double rmax, std::uint64_t seed) {
  if (!(rmax > 0.0 && rmax < 1.0)) throw DomainError("sample_ball_points: rmax must lie in (0,1)");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<SpherePoint> pts;
  for (int i = 0; i < count; ++i) {
    SpherePoint w(n + 1);
    double s = 0.0;
    for (auto& c : w) {
      c = cplx(g(rng), g(rng));
      s += std::norm(c);
    }
    const double radius = rmax * std::pow(u(rng), 1.0 / (2.0 * (n + 1)));
    for (auto& c : w) c *= radius / std::sqrt(s);
    pts.push_back(std::move(w));
  }
  return pts;
}

std::vector<double> pde_residual_radial(const RadialProfile& g, BiDegree bd, const ScatterParams& p,
                                        const std::vector<double>& x_grid) {
  const double s = p.s();
  const double jk = bd.j + bd.k;
  std::vector<double> out;
  out.reserve(x_grid.size());
  for (double x : x_grid) {
    const double phi = 1.0 - x;
    const double g0 = g.at_phi(phi, 0), g1 = g.at_phi(phi, 1), g2 = g.at_phi(phi, 2);
    const double tg = x * phi * g2 + (jk + p.n + 1 - (jk + 1) * x) * g1 - bd.j * bd.k * g0;
    out.push_back(-phi * tg - s * (p.n + 1 - s) * g0);
  }
  return out;
}

FGLimits split_FG(BiDegree bd, const ScatterParams& p) {
  p.validate();
  if (std::fabs(2.0 * p.gamma - std::round(2.0 * p.gamma)) < 1e-12) {
    throw DomainError("split_FG: 2*gamma is an integer (logarithmic case)");
  }
  const HypTriple h = phi_params(bd, p);
  const double A = phi_jk_coefficient(bd, p);
  const double e = h.c - h.a - h.b;  // = 2γ
  int s1 = 1, s2 = 1;
  const double l1 = log_abs_gamma(h.c, &s1) + log_abs_gamma(e, &s1) - log_abs_gamma(h.c - h.a, &s1) -
                    log_abs_gamma(h.c - h.b, &s1);
  const double l2 = log_abs_gamma(h.c, &s2) + log_abs_gamma(-e, &s2) - log_abs_gamma(h.a, &s2) -
                    log_abs_gamma(h.b, &s2);
  return {A * s1 * std::exp(l1), A * s2 * std::exp(l2)};
}

}  // namespace crtrace
