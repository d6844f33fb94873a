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

#include "crtrace/trace.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "crtrace/constants.hpp"
#include "crtrace/errors.hpp"
#include "crtrace/exact.hpp"
#include "crtrace/intertwine.hpp"
#include "crtrace/scatter.hpp"
#include "crtrace/special_fn.hpp"

namespace crtrace {

namespace {

mpq_class exact_gamma(double gamma) {
  auto q = rationalize(gamma);
  if (!q) throw DomainError("trace: gamma must be a rational with small denominator");
  return *q;
}

double log_abs_gamma(double x, int* sign) {
  const LogGamma g = log_gamma(x);
  *sign *= g.sign;
  return g.value;
}

// Jets of scale · 2F1(a, b; c; 1 - phi).
RadialProfile hyp_profile(double a, double b, double c, double scale) {
  return RadialProfile(
      [a, b, c, scale](double phi, int order) {
        const double f = pochhammer(a, order) * pochhammer(b, order) / pochhammer(c, order);
        if (f == 0.0) return 0.0;
        return scale * f * hyp2f1_complement(a + order, b + order, c + order, phi);
      },
      16);
}

RadialProfile phi_power(double e) { return RadialProfile::phi_power_poly(e, {1.0}); }

struct Ladder {
  double a, A, B, C;
  int m;
};

Ladder ladder(const RadialTestFunction& u) {
  Ladder l;
  l.a = 0.5 * (u.n + 1 - u.gamma);
  l.A = l.a + u.bd.j;
  l.B = l.a + u.bd.k;
  l.C = u.bd.j + u.bd.k + u.n + 1.0;
  l.m = u.bd.j + u.bd.k + u.n;
  return l;
}

double weighted_bulk(const RadialTestFunction& u, const RadialProfile& g, const RadialProfile& h,
                     const RadialRule& rule) {
  // 2^{1-γ} ∫ g L h (1-|w|²)^{-[γ]} dz reduced: dz -> ½ x^{j+k+n} dx per ∫|Y|².
  const RadialTestFunction hv = RadialTestFunction::with_profile(u.n, u.gamma, u.bd, h);
  const RadialProfile Lh = radial_L2k_ball(hv);
  const int m = u.bd.j + u.bd.k + u.n;
  const double I = rule.integrate([&](double phi) {
    const double x = 1.0 - phi;
    return g.at_phi(phi) * Lh.at_phi(phi) * std::pow(x, m);
  });
  return std::pow(2.0, 1.0 - u.gamma) * 0.5 * I;
}

struct Coupling {
  std::vector<double> sigma, varsigma;
};

Coupling coupling_constants(const RadialTestFunction& u) {
  const ConstantsTable t = build_table(exact_gamma(u.gamma), u.n);
  Coupling c;
  for (const auto& s : t.sigma) c.sigma.push_back(s.value());
  for (const auto& s : t.varsigma) c.varsigma.push_back(s.value());
  return c;
}

// Boundary measure factor: ∫_S f dσ with dσ = |2J_∂C| pushforward equals
// 2 ∫_S f dS.
constexpr double kBoundaryMass = 2.0;

}  // namespace

int RadialTestFunction::k() const { return static_cast<int>(std::floor(gamma)) + 1; }

double RadialTestFunction::frac() const { return gamma - std::floor(gamma); }

void RadialTestFunction::validate() const {
  if (n < 1) throw DomainError("RadialTestFunction: n must be >= 1");
  if (!(gamma > 0.0 && gamma < 2.0) || std::fabs(gamma - 1.0) < 1e-12)
    throw DomainError("RadialTestFunction: need gamma in (0,1) or (1,2)");
  if (bd.j < 0 || bd.k < 0) throw DomainError("RadialTestFunction: negative bidegree");
  exact_gamma(gamma);
}

RadialTestFunction RadialTestFunction::with_profile(int n, double gamma, BiDegree bd,
                                                    RadialProfile g) {
  RadialTestFunction u;
  u.profile = std::move(g);
  u.bd = bd;
  u.n = n;
  u.gamma = gamma;
  u.validate();
  return u;
}

RadialProfile kernel_profile(int n, double gamma, BiDegree bd, int index) {
  if (index == 0) return phi_jk_profile(bd, ScatterParams{n, 0.5 * gamma});
  if (!(gamma > 1.0 && gamma < 2.0)) throw DomainError("kernel_profile: index 1 needs k = 2");
  // (1-x) 2F1(A+1, B+1; C; x) has (1-x)^{[γ]} coefficient Γ(C)Γ(2-γ)/(Γ(A+1)Γ(B+1)).
  const double a = 0.5 * (n + 1 - gamma);
  const double A = a + bd.j, B = a + bd.k, C = bd.j + bd.k + n + 1.0;
  int sign = 1;
  const double l = log_abs_gamma(C, &sign) + log_abs_gamma(2.0 - gamma, &sign) -
                   log_abs_gamma(A + 1, &sign) - log_abs_gamma(B + 1, &sign);
  const double d1 = sign * std::exp(l);
  return phi_power(1.0) * hyp_profile(A + 1, B + 1, C, 1.0 / d1);
}

RadialTestFunction RadialTestFunction::exact_solution(int n, double gamma, BiDegree bd, double b0,
                                                      double b_frac) {
  RadialProfile g = b0 * kernel_profile(n, gamma, bd, 0);
  if (gamma > 1.0) g = g + b_frac * kernel_profile(n, gamma, bd, 1);
  return with_profile(n, gamma, bd, g);
}

RadialProfile hypergeometric_operator(const RadialProfile& g, double A, double B, double C) {
  if (g.max_order() < 2) throw DomainError("hypergeometric_operator: need second derivatives");
  RadialProfile out(
      [g, A, B, C](double phi, int o) {
        const double x = 1.0 - phi;
        const double s = A + B + 1.0;
        double v = x * phi * g.at_phi(phi, o + 2) + (C - s * x) * g.at_phi(phi, o + 1) -
                   A * B * g.at_phi(phi, o);
        if (o >= 1) v += o * ((1.0 - 2.0 * x) * g.at_phi(phi, o + 1) - s * g.at_phi(phi, o));
        if (o >= 2) v += -static_cast<double>(o) * (o - 1) * g.at_phi(phi, o);
        return v;
      },
      g.max_order() - 2);
  return out;
}

RadialProfile radial_L2k_ball(const RadialTestFunction& u) {
  const Ladder l = ladder(u);
  if (u.k() == 1) return -4.0 * hypergeometric_operator(u.profile, l.A, l.B, l.C);
  if (u.profile.max_order() < 4)
    throw DomainError("radial_L2k_ball: k = 2 needs an analytic profile");
  const RadialProfile h = hypergeometric_operator(u.profile, l.A, l.B, l.C);
  return 16.0 * hypergeometric_operator(h, l.A + 1, l.B + 1, l.C);
}

RadialProfile radial_L2k_ball_conjugated(const RadialTestFunction& u) {
  const int k = u.k();
  const double a = 0.5 * (u.n + 2 - u.frac() - k);
  const double s = 0.5 * (u.n + 1 + u.gamma);
  const double C = u.bd.j + u.bd.k + u.n + 1.0;
  RadialProfile G = phi_power(a) * u.profile;
  for (int i = 0; i < k; ++i) {
    const RadialProfile lap = 4.0 * (phi_power(1.0) * hypergeometric_operator(G, u.bd.j, u.bd.k, C));
    G = lap + (4.0 * (s - i) * (u.n + 1 - s + i)) * G;
  }
  const double sign = (k % 2) ? -1.0 : 1.0;
  return sign * (phi_power(-(a + k)) * G);
}

double RadialRule::integrate(const std::function<double(double)>& f) const {
  long double s = 0.0L;
  for (std::size_t i = 0; i < phi.size(); ++i) s += static_cast<long double>(w[i]) * f(phi[i]);
  return static_cast<double>(s);
}

RadialRule make_radial_rule(double gamma, int nodes) {
  const mpq_class g = exact_gamma(gamma);
  const mpq_class frac = g - floor_of(g);
  RadialRule r;
  r.p = static_cast<int>(frac.get_den().get_si());
  const double beta = r.p * (1.0 - frac.get_d()) - 1.0;  // integer >= 0
  const Rule gj = gauss_jacobi(nodes, 0.0, beta);
  const double scale = r.p * std::pow(2.0, -beta - 1.0);
  for (std::size_t i = 0; i < gj.size(); ++i) {
    const double t = 0.5 * (1.0 + gj.x[i]);
    r.phi.push_back(std::pow(t, r.p));
    r.w.push_back(scale * gj.w[i]);
  }
  return r;
}

BoundaryValues radial_boundary_values(const RadialTestFunction& u) {
  u.validate();
  constexpr int kTerms = 6, kPoints = 48;
  constexpr double kPhiMax = 0.1, kPhiMin = 1e-3;
  const double f = u.frac();
  Eigen::MatrixXd M(kPoints, 2 * kTerms);
  Eigen::VectorXd rhs(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    // Chebyshev points in log(phi).
    const double c = 0.5 * (1.0 - std::cos(M_PI * (i + 0.5) / kPoints));
    const double phi = kPhiMin * std::pow(kPhiMax / kPhiMin, c);
    const double s = phi / kPhiMax;
    for (int m = 0; m < kTerms; ++m) {
      M(i, m) = std::pow(s, m);
      M(i, kTerms + m) = std::pow(s, m + f);
    }
    rhs(i) = u.profile.at_phi(phi);
  }
  Eigen::VectorXd norms = M.colwise().norm();
  Eigen::MatrixXd Ms = M * norms.cwiseInverse().asDiagonal();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Ms);
  const auto& sv = svd.singularValues();
  BoundaryValues out;
  out.condition = sv(0) / sv(sv.size() - 1);
  if (!(out.condition <= 1e10))
    throw ConvergenceError("radial_boundary_values: ill-conditioned collocation fit");
  Eigen::VectorXd c = Ms.colPivHouseholderQr().solve(rhs);
  c = c.cwiseQuotient(norms);
  for (int m = 0; m < kTerms; ++m) {
    out.coef.push_back(c(m) / std::pow(kPhiMax, m));
    out.coef_frac.push_back(c(kTerms + m) / std::pow(kPhiMax, m + f));
  }
  out.B["B_0"] = out.coef[0];
  if (u.k() == 1) {
    out.B["B_2g"] = std::pow(2.0, -u.gamma) * out.coef_frac[0];
  } else {
    out.B["B_2[g]"] = std::pow(2.0, -f) * out.coef_frac[0];
    out.B["B_2"] = 0.5 * out.coef[1];
    out.B["B_2g"] = std::pow(2.0, -u.gamma) * out.coef_frac[1];
  }
  return out;
}

double EnergyReport::energy() const {
  double e = bulk;
  for (double c : boundary_cross) e -= c;
  return e;
}

double EnergyReport::lower_bound() const {
  double s = 0.0;
  for (double c : boundary_spectral) s += c;
  return s;
}

double EnergyReport::identity_defect() const {
  double scale = std::max(std::fabs(bulk), std::fabs(gap));
  for (double c : boundary_cross) scale = std::max(scale, std::fabs(c));
  for (double c : boundary_spectral) scale = std::max(scale, std::fabs(c));
  if (scale == 0.0) return 0.0;
  return std::fabs(energy() - gap - lower_bound()) / scale;
}

namespace {

// Cross terms Σ σ_j B(u) B(v) with the ball pairing of indices.
std::vector<double> cross_terms(const RadialTestFunction& u, const BoundaryValues& bu,
                                const BoundaryValues& bv, const Coupling& cc) {
  std::vector<double> out;
  out.push_back(kBoundaryMass * cc.sigma[0] * bu.B.at("B_0") * bv.B.at("B_2g"));
  if (u.k() == 2)
    out.push_back(kBoundaryMass * cc.sigma[1] * bu.B.at("B_2[g]") * bv.B.at("B_2"));
  return out;
}

RadialProfile reconstruction(const RadialTestFunction& u, const BoundaryValues& bv) {
  RadialProfile g = bv.coef[0] * kernel_profile(u.n, u.gamma, u.bd, 0);
  if (u.k() == 2) g = g + bv.coef_frac[0] * kernel_profile(u.n, u.gamma, u.bd, 1);
  return g;
}

}  // namespace

EnergyReport energy(const RadialTestFunction& u, int nodes) {
  u.validate();
  const RadialRule rule = make_radial_rule(u.gamma, nodes);
  const Coupling cc = coupling_constants(u);
  const BoundaryValues bv = radial_boundary_values(u);
  EnergyReport rep;
  rep.bulk = weighted_bulk(u, u.profile, u.profile, rule);
  rep.boundary_cross = cross_terms(u, bv, bv, cc);
  const double b0 = bv.B.at("B_0");
  rep.boundary_spectral.push_back(kBoundaryMass * cc.varsigma[0] *
                                  p_gamma_sphere_eigenvalue(u.gamma, u.bd, u.n) * b0 * b0);
  if (u.k() == 2) {
    const double bf = bv.B.at("B_2[g]");
    rep.boundary_spectral.push_back(kBoundaryMass * cc.varsigma[1] *
                                    p_gamma_sphere_eigenvalue(2.0 - u.gamma, u.bd, u.n) * bf * bf);
  }
  const RadialProfile w = u.profile - reconstruction(u, bv);
  rep.gap = weighted_bulk(u, w, w, rule);
  return rep;
}

double dirichlet_form(const RadialTestFunction& u, const RadialTestFunction& v, int nodes) {
  if (u.n != v.n || u.gamma != v.gamma || !(u.bd == v.bd))
    throw DomainError("dirichlet_form: parameters of u and v differ");
  const RadialRule rule = make_radial_rule(u.gamma, nodes);
  const Coupling cc = coupling_constants(u);
  double q = weighted_bulk(u, u.profile, v.profile, rule);
  for (double c : cross_terms(u, radial_boundary_values(u), radial_boundary_values(v), cc)) q -= c;
  return q;
}

double symmetry_check(const RadialTestFunction& u, const RadialTestFunction& v, int nodes) {
  return std::fabs(dirichlet_form(u, v, nodes) - dirichlet_form(v, u, nodes));
}

namespace {

void require_k1_pair(const RadialTestFunction& a, const RadialTestFunction& b) {
  if (a.k() != 1 || b.k() != 1) throw DomainError("green flux: k = 1 setting only");
  if (a.n != b.n || a.gamma != b.gamma || !(a.bd == b.bd))
    throw DomainError("green flux: parameters differ");
}

}  // namespace

GreenFluxCheck green_flux_check(const RadialTestFunction& a, const RadialTestFunction& b,
                                double x1) {
  require_k1_pair(a, b);
  if (!(x1 > 0.0 && x1 < 1.0)) throw DomainError("green_flux_check: x1 must lie in (0,1)");
  const Ladder l = ladder(a);
  const RadialProfile Ha = hypergeometric_operator(a.profile, l.A, l.B, l.C);
  const RadialProfile Hb = hypergeometric_operator(b.profile, l.A, l.B, l.C);
  const Rule rule = graded_rule(0.0, x1, true, 24, 0.35, 16);
  GreenFluxCheck c;
  c.volume = rule.integrate([&](double x) {
    const double phi = 1.0 - x;
    const double w = std::pow(x, l.m) * std::pow(phi, -a.gamma);
    return (a.profile.at_phi(phi) * Hb.at_phi(phi) - b.profile.at_phi(phi) * Ha.at_phi(phi)) * w;
  });
  const double phi1 = 1.0 - x1;
  const double p = std::pow(x1, l.m + 1) * std::pow(phi1, 1.0 - a.gamma);
  c.flux = p * (a.profile.at_phi(phi1) * b.profile.at_phi(phi1, 1) -
                b.profile.at_phi(phi1) * a.profile.at_phi(phi1, 1));
  c.defect = std::fabs(c.volume - c.flux) / std::max(1.0, std::fabs(c.flux));
  return c;
}

GreenFluxCheck green_flux_limit_check(const RadialTestFunction& a, const RadialTestFunction& b) {
  require_k1_pair(a, b);
  const Ladder l = ladder(a);
  const RadialProfile Ha = hypergeometric_operator(a.profile, l.A, l.B, l.C);
  const RadialProfile Hb = hypergeometric_operator(b.profile, l.A, l.B, l.C);
  const RadialRule rule = make_radial_rule(a.gamma);
  GreenFluxCheck c;
  c.volume = rule.integrate([&](double phi) {
    return (a.profile.at_phi(phi) * Hb.at_phi(phi) - b.profile.at_phi(phi) * Ha.at_phi(phi)) *
           std::pow(1.0 - phi, l.m);
  });
  const BoundaryValues ba = radial_boundary_values(a), bb = radial_boundary_values(b);
  c.flux = -a.gamma * (ba.coef[0] * bb.coef_frac[0] - bb.coef[0] * ba.coef_frac[0]);
  c.defect = std::fabs(c.volume - c.flux) / std::max(1.0, std::fabs(c.flux));
  return c;
}

MinimizationCheck minimization_check(const RadialTestFunction& u,
                                     const std::vector<RadialProfile>& bumps, double h) {
  const std::size_t m = bumps.size();
  auto energy_at = [&](const std::vector<double>& eps) {
    RadialProfile g = u.profile;
    for (std::size_t i = 0; i < m; ++i)
      if (eps[i] != 0.0) g = g + eps[i] * bumps[i];
    return energy(RadialTestFunction::with_profile(u.n, u.gamma, u.bd, g)).energy();
  };
  MinimizationCheck res;
  std::vector<double> eps(m, 0.0);
  res.e0 = energy_at(eps);
  res.min_energy = res.e0;
  res.argmin = eps;
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < m; ++i, c /= 3) eps[i] = (static_cast<double>(c % 3) - 1.0) * h;
    const double e = energy_at(eps);
    if (e < res.min_energy) {
      res.min_energy = e;
      res.argmin = eps;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> ep(m, 0.0), em(m, 0.0);
    ep[i] = h;
    em[i] = -h;
    res.gradient.push_back((energy_at(ep) - energy_at(em)) / (2.0 * h));
  }
  res.minimized_at_zero = std::all_of(res.argmin.begin(), res.argmin.end(),
                                      [](double v) { return v == 0.0; });
  return res;
}

}  // namespace crtrace
