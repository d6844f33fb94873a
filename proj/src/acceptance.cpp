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

#include "crtrace/acceptance.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "crtrace/constants.hpp"
#include "crtrace/errors.hpp"
#include "crtrace/exact.hpp"
#include "crtrace/formal_algebra.hpp"
#include "crtrace/geometry.hpp"
#include "crtrace/harmonics.hpp"
#include "crtrace/intertwine.hpp"
#include "crtrace/scatter.hpp"
#include "crtrace/special_fn.hpp"
#include "crtrace/trace.hpp"

namespace crtrace {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Tracks a running worst error against a tolerance.
struct Tally {
  double tol;
  double worst = 0.0;
  bool ok = true;
  void add(double err) {
    if (!(err <= tol)) ok = false;
    if (std::isnan(err)) worst = err;
    else if (!std::isnan(worst)) worst = std::max(worst, err);
  }
};

CriterionResult make_result(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

// ---------------------------------------------------------------------------

CriterionResult factorization() {
  CriterionResult r = make_result(1, "exact factorization k<=4, n<=3, a in {0,+-1/2,1}, degree 3");
  r.time_limit = 60;
  int failures = 0, total = 0;
  long basis = 0;
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 3; ++n)
      for (const char* a : {"0", "1/2", "-1/2", "1"}) {
        const FactorizationResult f = verify_factorization(k, parse_rational(a), n, 3);
        ++total;
        basis += f.basis_checked;
        if (!f.holds) {
          ++failures;
          r.notes.push_back("k=" + std::to_string(k) + " n=" + std::to_string(n) + " a=" + a +
                            ": " + (f.witness ? f.witness->str() : "no witness"));
        }
      }
  r.passed = failures == 0;
  r.worst = failures;
  r.notes.push_back(std::to_string(total) + " configurations, " + std::to_string(basis) +
                    " basis elements");
  return r;
}

CriterionResult exact_constants() {
  CriterionResult r = make_result(2, "exact constants and relations; varsigma_0 = Frank constant");
  r.time_limit = 5;
  bool ok = true;
  for (const char* gs : {"1/2", "4/3", "5/2", "13/4", "7/2"}) {
    for (int n = 1; n <= 2; ++n) {
      try {
        const RelationReport rep = relation_check(build_table(parse_rational(gs), n));
        for (const auto& c : rep.checks)
          if (!c.passed) {
            ok = false;
            r.notes.push_back(std::string("gamma=") + gs + ": " + c.name);
          }
      } catch (const MismatchError& e) {
        ok = false;
        r.notes.push_back(std::string("gamma=") + gs + ": " + e.what());
      }
    }
  }
  for (const char* gs : {"1/3", "1/2", "3/4"}) {
    const mpq_class g = parse_rational(gs);
    const ConstantsTable t = build_table(g, 1);
    if (!(t.varsigma.at(0) == frank_constant(g))) {
      ok = false;
      r.notes.push_back(std::string("varsigma_0 != Frank constant at gamma=") + gs);
    }
  }
  r.passed = ok;
  return r;
}

SymbolPoly random_symbol(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7), pw(0, 2);
  auto q = [&] {
    mpq_class v(num(rng), den(rng));
    v.canonicalize();
    return v;
  };
  SymbolPoly p;
  for (int i = 0; i < 3; ++i) {
    const int bp = pw(rng), tp = pw(rng);
    const mpq_class re = q(), im = q();
    p += SymbolPoly::monomial(bp, tp, GaussQ(re, im));
  }
  if (p.is_zero()) p = SymbolPoly::constant(1);
  return p;
}

CriterionResult boundary_normalization() {
  CriterionResult r = make_result(3, "boundary-operator normalization, annihilation, read-off, reconstruction");
  r.time_limit = 10;
  constexpr int kDepth = 4;
  std::mt19937_64 rng(20260301);
  int checks = 0;
  bool ok = true;
  auto fail = [&](const std::string& s) {
    ok = false;
    r.notes.push_back(s);
  };
  for (const char* gs : {"1/2", "4/3", "5/2"}) {
    const RationalGamma g = RationalGamma::make(parse_rational(gs), 1);
    const std::string tag = std::string("gamma=") + gs;
    std::vector<BoundaryIndex> indices;
    for (int j = 0; j <= g.half_floor(); ++j) indices.push_back({BoundaryKind::Integer, j});
    for (int j = 0; j <= g.floor - g.half_floor() - 1; ++j) indices.push_back({BoundaryKind::Frac, j});
    for (const auto& idx : indices) {
      const mpq_class ord = idx.order(g);
      const std::string itag = tag + (idx.kind == BoundaryKind::Integer ? " B_int" : " B_frac") +
                               std::to_string(idx.j);
      ++checks;
      if (!(apply_boundary_op(GradedExpansion::monomial(ord, SymbolPoly::constant(1)), idx, g) ==
            SymbolPoly::constant(1)))
        fail(itag + ": B(rho^order) != 1");
      // Read-off on rho^order times an even expansion.
      GradedExpansion even;
      SymbolPoly lead;
      for (int m = 0; m < kDepth; ++m) {
        const SymbolPoly p = random_symbol(rng);
        if (m == 0) lead = p;
        even.add(ord + 2 * m, p);
      }
      ++checks;
      if (!(apply_boundary_op(even, idx, g) == lead)) fail(itag + ": read-off on even class");
      // Cross-branch annihilation.
      const mpq_class other = idx.kind == BoundaryKind::Integer ? mpq_class(2 * g.frac) : mpq_class(0);
      for (int m = 0; m < kDepth; ++m) {
        ++checks;
        const SymbolPoly v =
            apply_boundary_op(GradedExpansion::monomial(other + 2 * m, random_symbol(rng)), idx, g);
        if (!v.is_zero()) fail(itag + ": cross-branch grade not annihilated");
      }
    }
    GradedExpansion e;
    for (int m = 0; m < kDepth; ++m) {
      e.add(mpq_class(2 * m), random_symbol(rng));
      e.add(2 * m + 2 * g.frac, random_symbol(rng));
    }
    ++checks;
    if (!(reconstruct_series(e, g, kDepth).series == e)) fail(tag + ": series reconstruction");
    ++checks;
    if (!reconstruct_series(GradedExpansion(), g, kDepth).series.is_zero())
      fail(tag + ": reconstruction of zero");
  }
  r.passed = ok;
  r.notes.push_back(std::to_string(checks) + " exact checks");
  return r;
}

CriterionResult funk_hecke() {
  CriterionResult r = make_result(4, "Funk-Hecke quadrature vs closed-form eigenvalue");
  r.time_limit = 30;
  Tally t{1e-6};
  r.tolerance = t.tol;
  for (int n : {1, 2})
    for (double alpha : {0.3, 0.7})
      for (int j = 0; j <= 4; ++j)
        for (int k = 0; k <= 4; ++k) {
          const BiDegree bd{j, k};
          const cplx q = funk_hecke_eigenvalue_quadrature(
              [alpha](cplx u) { return cplx(std::pow(std::abs(1.0 - u), -2.0 * alpha), 0.0); }, bd, n);
          const double e = power_kernel_eigenvalue(alpha, bd, n);
          t.add(std::abs(q - e) / std::fabs(e));
        }
  r.passed = t.ok;
  r.worst = t.worst;
  return r;
}

CriterionResult scattering() {
  CriterionResult r = make_result(5, "Poisson integral vs series (20 points); PDE residual of exact solution");
  r.time_limit = 60;
  Tally gap{1e-6}, res{1e-9};
  r.tolerance = gap.tol;
  const SphereQuadrature quad = poisson_quadrature(1);
  const auto pts = sample_ball_points(1, 20, 0.9, 4242);
  std::vector<double> grid;
  for (int i = 0; i <= 99; ++i) grid.push_back(0.99 * i / 99.0);
  for (double gamma : {0.3, 0.45})
    for (BiDegree bd : {BiDegree{0, 0}, BiDegree{1, 0}, BiDegree{2, 1}, BiDegree{3, 3}}) {
      const ScatterParams p{1, gamma};
      const MonomialHarmonic Y = canonical_harmonic(bd);
      const SpectralCoeffs coeffs{{bd, 1.0}};
      for (const auto& w : pts) {
        const cplx a = poisson_integral([&](const SpherePoint& x) { return Y(x); }, w, p, quad);
        const cplx b = scattering_series(coeffs, w, p);
        gap.add(std::abs(a - b) / std::abs(b));
      }
      const RadialProfile g =
          RadialProfile::phi_power_poly(p.n + 1 - p.s(), {1.0}) * phi_jk_profile(bd, p);
      for (double v : pde_residual_radial(g, bd, p, grid)) res.add(std::fabs(v));
    }
  r.passed = gap.ok && res.ok;
  r.worst = gap.worst;
  r.notes.push_back("max relative integral/series gap " + fmt("%.3e", gap.worst));
  r.notes.push_back("max PDE residual " + fmt("%.3e", res.worst) + " (tol 1e-9)");
  return r;
}

CriterionResult scattering_intertwining() {
  CriterionResult r = make_result(6, "c_{2g} * G-limit equals the sphere eigenvalue of order 2g");
  r.time_limit = 5;
  Tally t{1e-10};
  r.tolerance = t.tol;
  for (double gamma : {0.3, 0.45})
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k <= 4; ++k) {
        const BiDegree bd{j, k};
        const FGLimits fg = split_FG(bd, ScatterParams{1, gamma});
        const double ev = p_gamma_sphere_eigenvalue(2 * gamma, bd, 1);
        t.add(rel(c_gamma(2 * gamma) * fg.G_limit, ev));
        t.add(std::fabs(fg.F_limit - 1.0));
      }
  r.passed = t.ok;
  r.worst = t.worst;
  return r;
}

CriterionResult trace_identity() {
  CriterionResult r = make_result(7, "k=1 energy identity, equality case, inequality, symmetry");
  r.time_limit = 120;
  Tally ident{1e-6}, gap_exact{1e-8}, sym{1e-8};
  r.tolerance = ident.tol;
  double min_pert_gap = INFINITY;
  for (double gamma : {0.3, 0.6})
    for (BiDegree bd : {BiDegree{0, 0}, BiDegree{1, 0}, BiDegree{2, 1}}) {
      const int n = 1;
      const RadialTestFunction ex = RadialTestFunction::exact_solution(n, gamma, bd, 1.0);
      const EnergyReport ee = energy(ex);
      ident.add(ee.identity_defect());
      gap_exact.add(std::fabs(ee.gap) / std::max(1.0, std::fabs(ee.bulk)));
      ident.add(std::fabs(ee.energy() - ee.lower_bound()) /
                std::max(1.0, std::fabs(ee.lower_bound())));

      const RadialProfile bump = RadialProfile::phi_power_poly(1.0, {1.0, 1.0});
      const RadialTestFunction pert =
          RadialTestFunction::with_profile(n, gamma, bd, ex.profile + 1e-2 * bump);
      const EnergyReport ep = energy(pert);
      ident.add(ep.identity_defect());
      min_pert_gap = std::min(min_pert_gap, ep.gap);

      const RadialTestFunction poly = RadialTestFunction::with_profile(
          n, gamma, bd,
          RadialProfile::phi_power_poly(0.0, {1.0, 0.5, -0.2}) +
              RadialProfile::phi_power_poly(gamma, {0.4, 0.3}));
      const RadialTestFunction poly2 = RadialTestFunction::with_profile(
          n, gamma, bd,
          RadialProfile::phi_power_poly(0.0, {0.3, -1.0}) +
              RadialProfile::phi_power_poly(gamma, {1.0, 0.0, 0.2}));
      ident.add(energy(poly).identity_defect());
      sym.add(symmetry_check(ex, pert) / (1.0 + std::fabs(dirichlet_form(ex, pert))));
      sym.add(symmetry_check(poly, poly2) / (1.0 + std::fabs(dirichlet_form(poly, poly2))));
    }
  const bool pert_ok = min_pert_gap > 0.0;
  r.passed = ident.ok && gap_exact.ok && sym.ok && pert_ok;
  r.worst = ident.worst;
  r.notes.push_back("max identity defect " + fmt("%.3e", ident.worst));
  r.notes.push_back("max gap(exact)/max(1,|bulk|) " + fmt("%.3e", gap_exact.worst) + " (tol 1e-8)");
  r.notes.push_back("min gap(perturbed) " + fmt("%.3e", min_pert_gap) + " (must be > 0)");
  r.notes.push_back("max symmetry defect " + fmt("%.3e", sym.worst) + " (tol 1e-8)");
  return r;
}

// F(1) from values near z = 1 by least squares on {1, h^e, h, h^{e+1}}.
double gauss_value_extrapolated(double a, double b, double c) {
  const double e = c - a - b;
  constexpr int kPts = 8;
  Eigen::MatrixXd M(kPts, 4);
  Eigen::VectorXd y(kPts);
  for (int i = 0; i < kPts; ++i) {
    const double h = std::pow(10.0, -3.0 - 0.75 * i);
    M(i, 0) = 1.0;
    M(i, 1) = std::pow(h, e);
    M(i, 2) = h;
    M(i, 3) = std::pow(h, e + 1.0);
    y(i) = hyp2f1(a, b, c, 1.0 - h);
  }
  return M.colPivHouseholderQr().solve(y)(0);
}

CriterionResult special_functions() {
  CriterionResult r = make_result(8, "special functions: Euler, Gauss value, derivative, cosine and Jacobi pairs");
  r.time_limit = 30;
  Tally euler{1e-10}, gauss{1e-6}, deriv{1e-7}, cosine{1e-8}, jac{1e-9};
  std::mt19937_64 rng(8080);
  std::uniform_real_distribution<double> ab(-2.0, 3.0), cc(0.5, 4.0), zz(0.0, 0.9);
  for (int i = 0; i < 200; ++i) {
    const double a = ab(rng), b = ab(rng), c = cc(rng), z = zz(rng);
    const double f = hyp2f1(a, b, c, z);
    const double g = std::pow(1.0 - z, c - a - b) * hyp2f1(c - a, c - b, c, z);
    euler.add(std::fabs(f - g) / std::max({std::fabs(f), std::fabs(g), 1e-300}));
  }
  for (double a : {0.3, -0.7, 1.1})
    for (double b : {0.4, 1.6})
      for (double e : {0.2, 0.35, 0.6, 1.3, 2.5}) {
        const double c = a + b + e;
        if (is_nonpositive_integer(c) || c <= 0.0) continue;
        const double closed = gamma_fn(c) * gamma_fn(e) / (gamma_fn(c - a) * gamma_fn(c - b));
        gauss.add(rel(gauss_value_extrapolated(a, b, c), closed));
      }
  for (double a : {0.3, -1.2, 2.1})
    for (double b : {0.7, 1.5, -0.4})
      for (double c : {1.5, 0.8, 3.2})
        for (double z : {0.1, 0.4, 0.7})
          for (int order : {1, 2}) {
            const double h = 1e-3;
            auto F = [&](double x) { return hyp2f1(a, b, c, x); };
            double fd;
            if (order == 1)
              fd = (-F(z + 2 * h) + 8 * F(z + h) - 8 * F(z - h) + F(z - 2 * h)) / (12 * h);
            else
              fd = (-F(z + 2 * h) + 16 * F(z + h) - 30 * F(z) + 16 * F(z - h) - F(z - 2 * h)) /
                   (12 * h * h);
            const double an = hyp2f1_derivative({a, b, c, z}, order);
            deriv.add(std::fabs(an - fd) / std::max(1.0, std::fabs(an)));
          }
  for (double rr : {0.0, 0.3, 0.6})
    for (double s : {0.5, 1.2, 2.5})
      for (int d : {0, 1, 3}) {
        const IdentityPair p = cosine_integral_pair(rr, s, d);
        cosine.add(std::fabs(p.lhs - p.rhs) / (1.0 + std::fabs(p.rhs)));
      }
  for (int n : {1, 2, 3})
    for (int d : {0, 1, 3})
      for (int mu : {0, 2, 5})
        for (int m = 0; m <= 3; ++m) {
          const IdentityPair p = jacobi_integral_pair(n, d, mu, m);
          jac.add(std::fabs(p.lhs - p.rhs) / std::max(1.0, std::fabs(p.rhs)));
        }
  r.passed = euler.ok && gauss.ok && deriv.ok && cosine.ok && jac.ok;
  r.worst = std::max({euler.worst / euler.tol, gauss.worst / gauss.tol, deriv.worst / deriv.tol,
                      cosine.worst / cosine.tol, jac.worst / jac.tol});
  r.tolerance = 1.0;
  r.notes.push_back("Euler transform " + fmt("%.3e", euler.worst) + " (tol 1e-10)");
  r.notes.push_back("Gauss value " + fmt("%.3e", gauss.worst) + " (tol 1e-6)");
  r.notes.push_back("derivative identity " + fmt("%.3e", deriv.worst) + " (tol 1e-7)");
  r.notes.push_back("cosine pair " + fmt("%.3e", cosine.worst) + " (tol 1e-8)");
  r.notes.push_back("Jacobi pair " + fmt("%.3e", jac.worst) + " (tol 1e-9)");
  return r;
}

CriterionResult geometry() {
  CriterionResult r = make_result(9, "Cayley round trips and Jacobian / defining-function identities");
  r.time_limit = 5;
  Tally t{1e-12};
  r.tolerance = t.tol;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.5, 1.5), uq(0.05, 2.0);
  for (int n : {1, 2, 3})
    for (int i = 0; i < 100; ++i) {
      std::vector<cplx> z(n);
      for (auto& c : z) c = cplx(u(rng), u(rng));
      const double tt = u(rng), q = uq(rng);
      const SiegelPoint p = SiegelPoint::from_coords(z, tt, q);
      const BallPoint w = cayley(p);
      const SiegelPoint back = cayley_inverse(w);
      double rt = std::abs(back.zn1 - p.zn1) / std::max(1.0, std::abs(p.zn1));
      for (int a = 0; a < n; ++a) rt = std::max(rt, std::abs(back.z[a] - p.z[a]) / std::max(1.0, std::abs(p.z[a])));
      t.add(rt);
      const double phi = w.phi();
      const double d2 = std::norm(cplx(0.0, 1.0) + p.zn1);
      t.add(rel(phi, 4.0 * q / d2));
      const double J = jacobian_interior(p);
      t.add(rel(J, std::pow(phi, n + 2) / (4.0 * std::pow(q, n + 2))));
      t.add(rel(phi, q * std::pow(4.0 * J, 1.0 / (n + 2))));
      // Boundary point over the same (z, t).
      const SiegelPoint pb = heisenberg_boundary_point(z, tt);
      const BallPoint wb = cayley(pb);
      t.add(std::fabs(wb.norm2() - 1.0));
      const SiegelPoint bb = cayley_inverse(wb);
      double brt = std::abs(bb.zn1 - pb.zn1) / std::max(1.0, std::abs(pb.zn1));
      for (int a = 0; a < n; ++a) brt = std::max(brt, std::abs(bb.z[a] - pb.z[a]) / std::max(1.0, std::abs(pb.z[a])));
      t.add(brt);
      const double Jb = jacobian_boundary(z, tt);
      const double Ji = jacobian_interior(SiegelPoint::from_coords(z, tt, 0.0));
      t.add(rel(4.0 * Ji, std::pow(2.0 * Jb, (n + 2.0) / (n + 1.0))));
      double zs = 0.0;
      for (const auto& c : z) zs += std::norm(c);
      t.add(rel(Jb, std::pow(2.0, 2 * n + 1) / std::pow(tt * tt + (1 + zs) * (1 + zs), n + 1)));
    }
  r.passed = t.ok;
  r.worst = t.worst;
  return r;
}

}  // namespace

CriterionResult run_criterion(int id) {
  static const std::function<CriterionResult()> table[] = {
      factorization, exact_constants,  boundary_normalization, funk_hecke,       scattering,
      scattering_intertwining, trace_identity, special_functions, geometry};
  if (id < 1 || id > 9) throw DomainError("run_criterion: id must be 1..9");
  const auto t0 = Clock::now();
  CriterionResult r;
  try {
    r = table[id - 1]();
  } catch (const std::exception& e) {
    r.id = id;
    r.passed = false;
    r.notes.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (r.time_limit > 0.0 && r.seconds > r.time_limit) {
    r.passed = false;
    r.notes.push_back("runtime " + fmt("%.1f", r.seconds) + " s exceeds limit");
  }
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) out.push_back(run_criterion(id));
  return out;
}

std::vector<CriterionResult> run_diagnostics() {
  std::vector<CriterionResult> out;
  {
    CriterionResult r = make_result(0, "k=2 energy identity (gamma in (1,2))");
    r.tolerance = 1e-4;
    const auto t0 = Clock::now();
    Tally t{1e-4};
    for (double gamma : {1.25, 1.5})
      for (BiDegree bd : {BiDegree{0, 0}, BiDegree{1, 0}})
        for (auto [b0, bf] : {std::pair{1.0, 0.0}, std::pair{0.0, 1.0}, std::pair{1.0, 0.5}}) {
          try {
            const EnergyReport e =
                energy(RadialTestFunction::exact_solution(1, gamma, bd, b0, bf));
            t.add(e.identity_defect());
            r.notes.push_back("gamma=" + fmt("%.2f", gamma) + " bd=(" + std::to_string(bd.j) + "," +
                              std::to_string(bd.k) + ") b0=" + fmt("%.1f", b0) + " bfrac=" +
                              fmt("%.1f", bf) + " defect " + fmt("%.3e", e.identity_defect()));
          } catch (const std::exception& ex) {
            t.add(NAN);
            r.notes.push_back(std::string("exception: ") + ex.what());
          }
        }
    r.passed = t.ok;
    r.worst = t.worst;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    out.push_back(r);
  }
  {
    CriterionResult r = make_result(0, "Poisson integral vs series, Monte Carlo 1e6 nodes");
    r.tolerance = 5e-3;
    const auto t0 = Clock::now();
    Tally t{5e-3};
    const SphereQuadrature quad = build_quadrature(1, 1000000, QuadKind::MonteCarlo, 12345);
    const auto pts = sample_ball_points(1, 20, 0.9, 4242);
    for (double gamma : {0.3, 0.45})
      for (BiDegree bd : {BiDegree{0, 0}, BiDegree{1, 0}, BiDegree{2, 1}, BiDegree{3, 3}}) {
        const ScatterParams p{1, gamma};
        const MonomialHarmonic Y = canonical_harmonic(bd);
        double worst = 0.0;
        for (const auto& w : pts) {
          const cplx a = poisson_integral([&](const SpherePoint& x) { return Y(x); }, w, p, quad);
          const cplx b = scattering_series({{bd, 1.0}}, w, p);
          worst = std::max(worst, std::abs(a - b) / std::abs(b));
        }
        t.add(worst);
        r.notes.push_back("gamma=" + fmt("%.2f", gamma) + " bd=(" + std::to_string(bd.j) + "," +
                          std::to_string(bd.k) + ") worst " + fmt("%.3e", worst));
      }
    r.passed = t.ok;
    r.worst = t.worst;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    out.push_back(r);
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char buf[512];
  if (r.id > 0)
    std::snprintf(buf, sizeof buf, "%s criterion %d: %s [worst=%.3e tol=%.1e time=%.2fs]",
                  r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.worst, r.tolerance,
                  r.seconds);
  else
    std::snprintf(buf, sizeof buf, "%s diagnostic: %s [worst=%.3e tol=%.1e time=%.2fs]",
                  r.passed ? "PASS" : "FAIL", r.title.c_str(), r.worst, r.tolerance, r.seconds);
  return buf;
}

}  // namespace crtrace
