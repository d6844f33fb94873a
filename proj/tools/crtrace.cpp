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

// crtrace command-line front end.
//
// Exit status: 0 when every check is within tolerance, 1 on a failed check,
// 2 on a usage or parameter error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "crtrace/acceptance.hpp"
#include "crtrace/constants.hpp"
#include "crtrace/errors.hpp"
#include "crtrace/exact.hpp"
#include "crtrace/formal_algebra.hpp"
#include "crtrace/harmonics.hpp"
#include "crtrace/intertwine.hpp"
#include "crtrace/scatter.hpp"
#include "crtrace/trace.hpp"

using nlohmann::json;
using namespace crtrace;

namespace {

constexpr int kExitOk = 0, kExitFail = 1, kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A report is a table plus summary fields; JSON keeps everything, CSV and
// text render the table followed by the status.
struct Report {
  std::vector<std::string> columns;
  json rows = json::array();
  json summary = json::object();
  bool passed = true;
};

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();  // shortest round-trip form for floats
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Report& r, const std::string& format, std::ostream& os) {
  if (format == "json") {
    json j = r.summary;
    j["rows"] = r.rows;
    j["status"] = r.passed ? "PASS" : "FAIL";
    os << j.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> table;
  for (const auto& row : r.rows) {
    std::vector<std::string> line;
    for (const auto& c : r.columns) line.push_back(row.contains(c) ? cell(row.at(c)) : "");
    table.push_back(std::move(line));
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < r.columns.size(); ++i)
      os << (i ? "," : "") << csv_field(r.columns[i]);
    os << "\r\n";
    for (const auto& line : table) {
      for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << csv_field(line[i]);
      os << "\r\n";
    }
    return;
  }
  std::vector<std::size_t> width(r.columns.size());
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    width[i] = r.columns[i].size();
    for (const auto& line : table) width[i] = std::max(width[i], line[i].size());
  }
  auto put = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << line[i];
      if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
    }
    os << '\n';
  };
  if (!r.columns.empty()) {
    put(r.columns);
    for (const auto& line : table) put(line);
  }
  for (const auto& [k, v] : r.summary.items())
    if (!v.is_array() && !v.is_object()) os << k << ": " << cell(v) << '\n';
  if (r.summary.contains("notes"))
    for (const auto& n : r.summary.at("notes")) os << "  " << n.get<std::string>() << '\n';
  os << (r.passed ? "PASS" : "FAIL") << '\n';
}

json valued(double v, const char* provenance) {
  return json{{"value", v}, {"provenance", provenance}};
}

// Accepts "p/q", integers and decimals; floats reach only numeric code.
double parse_real(const std::string& s) {
  try {
    return parse_rational(s).get_d();
  } catch (const DomainError&) {
    throw UsageError("not a number: " + s);
  }
}

mpq_class parse_exact(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const DomainError&) {
    throw UsageError("not a rational: " + s);
  }
}

json monomial_json(const GammaMonomial& m) {
  return json{{"exact", m.str()},
              {"float", m.value()},
              {"provenance", m.is_rational() ? "exact" : "closed-form"}};
}

// ---------------------------------------------------------------------------

Report cmd_constants(const std::string& gamma_text, int n) {
  const mpq_class g = parse_exact(gamma_text);
  Report r;
  r.columns = {"family", "j", "exact", "float", "provenance"};
  r.summary["command"] = "constants";
  r.summary["gamma"] = to_string(g);
  r.summary["n"] = n;
  ConstantsTable t;
  try {
    t = build_table(g, n);
  } catch (const MismatchError& e) {
    r.passed = false;
    r.summary["notes"] = json::array({std::string(e.what())});
    return r;
  }
  auto add = [&](const char* family, int j, const GammaMonomial& m) {
    json row = monomial_json(m);
    row["family"] = family;
    row["j"] = j;
    r.rows.push_back(row);
  };
  for (std::size_t j = 0; j < t.b_lower.size(); ++j) add("b_lower", j, t.b_lower[j]);
  for (std::size_t j = 0; j < t.b_frac.size(); ++j) add("b_frac", j, t.b_frac[j]);
  for (const auto& [j, m] : t.b_upper) add("b_upper", j, m);
  for (const auto& [j, m] : t.b_upper_frac) add("b_upper_frac", j, m);
  for (std::size_t j = 0; j < t.b_mirror.size(); ++j) add("b_mirror", j, t.b_mirror[j]);
  for (std::size_t j = 0; j < t.sigma.size(); ++j) add("sigma", j, t.sigma[j]);
  for (std::size_t j = 0; j < t.varsigma.size(); ++j) add("varsigma", j, t.varsigma[j]);
  const RelationReport rel = relation_check(t);
  json checks = json::array();
  for (const auto& c : rel.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"provenance", "exact"}});
  r.summary["checks"] = checks;
  r.passed = rel.ok();
  return r;
}

Report cmd_eigenvalues(const std::string& gamma_text, int n, int jmax, int kmax) {
  const double gamma = parse_real(gamma_text);
  if (!(gamma > 0.0 && gamma < n + 1)) throw UsageError("eigenvalues: need 0 < gamma < n+1");
  Report r;
  r.columns = {"j", "k", "eigenvalue", "provenance"};
  r.summary["command"] = "eigenvalues";
  r.summary["gamma"] = gamma;
  r.summary["n"] = n;
  for (int j = 0; j <= jmax; ++j)
    for (int k = 0; k <= kmax; ++k)
      r.rows.push_back({{"j", j},
                        {"k", k},
                        {"eigenvalue", p_gamma_sphere_eigenvalue(gamma, {j, k}, n)},
                        {"provenance", "closed-form"}});
  return r;
}

Report cmd_funk_hecke(const std::string& alpha_text, int n, int jmax, int kmax, double tol) {
  const double alpha = parse_real(alpha_text);
  if (!(alpha > -1.0 && alpha < 0.5 * (n + 1))) throw UsageError("funk-hecke: need -1 < alpha < (n+1)/2");
  Report r;
  r.columns = {"j", "k", "closed_form", "quadrature", "rel_error"};
  r.summary["command"] = "funk-hecke";
  r.summary["alpha"] = alpha;
  r.summary["n"] = n;
  r.summary["tolerance"] = tol;
  for (int j = 0; j <= jmax; ++j)
    for (int k = 0; k <= kmax; ++k) {
      const BiDegree bd{j, k};
      const double e = power_kernel_eigenvalue(alpha, bd, n);
      const cplx q = funk_hecke_eigenvalue_quadrature(
          [alpha](cplx u) { return cplx(std::pow(std::abs(1.0 - u), -2.0 * alpha), 0.0); }, bd, n);
      const double err = std::abs(q - e) / std::fabs(e);
      if (!(err <= tol)) r.passed = false;
      r.rows.push_back({{"j", j}, {"k", k}, {"closed_form", e}, {"quadrature", q.real()},
                        {"rel_error", err}});
    }
  r.summary["provenance"] = {{"closed_form", "closed-form"}, {"quadrature", "quadrature"}};
  return r;
}

struct ScatterArgs {
  int n = 1, j = 0, k = 0, points = 20, resolution = 24, mc_nodes = 1000000;
  std::string gamma = "0.3", quad = "det";
  std::uint64_t seed = 0;
  double tol = 1e-6;
};

Report cmd_scatter(const ScatterArgs& a) {
  const ScatterParams p{a.n, parse_real(a.gamma)};
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const BiDegree bd{a.j, a.k};
  const SphereQuadrature quad =
      a.quad == "mc" ? build_quadrature(a.n, a.mc_nodes, QuadKind::MonteCarlo, a.seed)
                     : poisson_quadrature(a.n, a.resolution);
  const MonomialHarmonic Y = canonical_harmonic(bd);
  const RadialProfile g = RadialProfile::phi_power_poly(p.n + 1 - p.s(), {1.0}) * phi_jk_profile(bd, p);
  Report r;
  r.columns = {"point", "r", "integral_re", "integral_im", "series_re", "series_im", "rel_gap",
               "residual"};
  r.summary["command"] = "scatter";
  r.summary["n"] = a.n;
  r.summary["gamma"] = p.gamma;
  r.summary["j"] = a.j;
  r.summary["k"] = a.k;
  r.summary["quadrature"] = a.quad;
  r.summary["quadrature_nodes"] = quad.size();
  r.summary["seed"] = a.seed;
  r.summary["tolerance"] = a.tol;
  const auto pts = sample_ball_points(a.n, a.points, 0.9, a.seed);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& w = pts[i];
    double r2 = 0.0;
    for (const auto& c : w) r2 += std::norm(c);
    const cplx in = poisson_integral([&](const SpherePoint& x) { return Y(x); }, w, p, quad);
    const cplx se = scattering_series({{bd, 1.0}}, w, p);
    const double gap = std::abs(in - se) / std::abs(se);
    const double res = pde_residual_radial(g, bd, p, {r2}).at(0);
    if (!(gap <= a.tol) || !(std::fabs(res) <= 1e-9)) r.passed = false;
    r.rows.push_back({{"point", i}, {"r", std::sqrt(r2)}, {"integral_re", in.real()},
                      {"integral_im", in.imag()}, {"series_re", se.real()}, {"series_im", se.imag()},
                      {"rel_gap", gap}, {"residual", res}});
  }
  const FGLimits fg = split_FG(bd, p);
  r.summary["F_limit"] = valued(fg.F_limit, "closed-form");
  r.summary["G_limit"] = valued(fg.G_limit, "closed-form");
  r.summary["c_2g_times_G_limit"] = valued(c_gamma(2 * p.gamma) * fg.G_limit, "closed-form");
  r.summary["sphere_eigenvalue_2g"] =
      valued(p_gamma_sphere_eigenvalue(2 * p.gamma, bd, p.n), "closed-form");
  r.summary["provenance"] = {{"integral", "quadrature"}, {"series", "closed-form"},
                             {"residual", "closed-form"}};
  return r;
}

Report cmd_factorize(int k, const std::string& a_text, int n, int degree, int perturb) {
  if (k < 1 || k > 5 || n < 1 || n > 3 || degree < 0)
    throw UsageError("factorize: need 1 <= k <= 5, 1 <= n <= 3, degree >= 0");
  const mpq_class a = parse_exact(a_text);
  const FactorizationResult f = verify_factorization(k, a, n, degree, perturb);
  Report r;
  r.summary["command"] = "factorize";
  r.summary["k"] = k;
  r.summary["a"] = to_string(a);
  r.summary["n"] = n;
  r.summary["degree"] = degree;
  r.summary["basis_checked"] = f.basis_checked;
  r.summary["provenance"] = "exact";
  if (perturb) r.summary["perturbed_factor"] = perturb;
  if (f.witness) r.summary["witness"] = f.witness->str();
  r.passed = f.holds;
  return r;
}

struct TraceArgs {
  int n = 1, j = 0, k = 0, nodes = 256;
  std::string gamma = "3/10";
  double eps = 1e-2;
};

Report cmd_trace_gap(const TraceArgs& a) {
  const double gamma = parse_real(a.gamma);
  const BiDegree bd{a.j, a.k};
  RadialTestFunction ex;
  try {
    ex = RadialTestFunction::exact_solution(a.n, gamma, bd, 1.0, gamma > 1.0 ? 0.5 : 0.0);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const bool stretch = ex.k() == 2;
  const double tol = stretch ? 1e-4 : 1e-6;
  const double frac = ex.frac();
  const RadialTestFunction pert = RadialTestFunction::with_profile(
      a.n, gamma, bd, ex.profile + a.eps * RadialProfile::phi_power_poly(2.0, {1.0, 1.0}));
  const RadialTestFunction poly = RadialTestFunction::with_profile(
      a.n, gamma, bd,
      RadialProfile::phi_power_poly(0.0, {1.0, 0.5, -0.2}) +
          RadialProfile::phi_power_poly(frac, {0.4, 0.3}));
  Report r;
  r.columns = {"case", "bulk", "cross", "spectral", "energy", "gap", "identity_defect"};
  r.summary["command"] = "trace-gap";
  r.summary["n"] = a.n;
  r.summary["gamma"] = gamma;
  r.summary["j"] = a.j;
  r.summary["k"] = a.k;
  r.summary["eps"] = a.eps;
  r.summary["tolerance"] = tol;
  r.summary["provenance"] = "quadrature";
  bool ok = true;
  auto add = [&](const char* name, const RadialTestFunction& u) {
    const EnergyReport e = energy(u, a.nodes);
    double cross = 0.0;
    for (double c : e.boundary_cross) cross += c;
    if (!(e.identity_defect() <= tol)) ok = false;
    r.rows.push_back({{"case", name}, {"bulk", e.bulk}, {"cross", cross},
                      {"spectral", e.lower_bound()}, {"energy", e.energy()}, {"gap", e.gap},
                      {"identity_defect", e.identity_defect()}});
    return e;
  };
  const EnergyReport ee = add("exact", ex);
  const EnergyReport ep = add("perturbed", pert);
  add("polynomial", poly);
  const double sym = symmetry_check(ex, pert, a.nodes) /
                     (1.0 + std::fabs(dirichlet_form(ex, pert, a.nodes)));
  r.summary["symmetry_defect"] = sym;
  if (!(std::fabs(ee.gap) <= 1e-8 * std::max(1.0, std::fabs(ee.bulk)))) ok = false;
  if (!(ep.gap > 0.0)) ok = false;
  if (!(sym <= 1e-8)) ok = false;
  if (stretch) {
    r.summary["diagnostic"] = true;
    r.summary["diagnostic_status"] = ok ? "PASS" : "FAIL";
    r.passed = true;
  } else {
    r.passed = ok;
  }
  return r;
}

Report cmd_verify_all(bool quick) {
  Report r;
  r.columns = {"criterion", "status", "title", "worst", "tolerance", "seconds"};
  r.summary["command"] = "verify-all";
  r.summary["quick"] = quick;
  // Criteria run concurrently; results are reported in criterion order.
  std::vector<std::future<CriterionResult>> jobs;
  for (int id = 1; id <= 9; ++id)
    jobs.push_back(std::async(std::launch::async, [id] { return run_criterion(id); }));
  json notes = json::array();
  for (auto& job : jobs) {
    const CriterionResult c = job.get();
    if (!c.passed) r.passed = false;
    r.rows.push_back({{"criterion", c.id}, {"status", c.passed ? "PASS" : "FAIL"},
                      {"title", c.title}, {"worst", c.worst}, {"tolerance", c.tolerance},
                      {"seconds", std::round(c.seconds * 100.0) / 100.0}});
    for (const auto& n : c.notes) notes.push_back("criterion " + std::to_string(c.id) + ": " + n);
  }
  if (!quick) {
    for (const auto& d : run_diagnostics()) {
      notes.push_back(format_line(d));
      for (const auto& n : d.notes) notes.push_back("  " + n);
    }
  }
  r.summary["notes"] = notes;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crtrace: CR fractional operators, scattering and boundary trace checks"};
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  std::string gamma = "1/2";
  int n = 1, jmax = 4, kmax = 4;
  auto* constants = app.add_subcommand("constants", "Exact constant tables and relations");
  constants->add_option("--gamma", gamma, "Exact rational gamma (p/q)")->required();
  constants->add_option("--n", n, "Ambient dimension index")->check(CLI::PositiveNumber);
  add_format(constants);

  auto* eig = app.add_subcommand("eigenvalues", "Sphere eigenvalues of the intertwining operator");
  eig->add_option("--gamma", gamma, "Order (p/q or decimal)")->required();
  eig->add_option("--n", n)->check(CLI::PositiveNumber);
  eig->add_option("--jmax", jmax)->check(CLI::NonNegativeNumber);
  eig->add_option("--kmax", kmax)->check(CLI::NonNegativeNumber);
  add_format(eig);

  std::string alpha = "0.3";
  double fh_tol = 1e-6;
  auto* fh = app.add_subcommand("funk-hecke", "Funk-Hecke eigenvalues: quadrature vs closed form");
  fh->add_option("--alpha", alpha)->required();
  fh->add_option("--n", n)->check(CLI::PositiveNumber);
  fh->add_option("--jmax", jmax)->check(CLI::NonNegativeNumber);
  fh->add_option("--kmax", kmax)->check(CLI::NonNegativeNumber);
  fh->add_option("--tolerance", fh_tol);
  add_format(fh);

  ScatterArgs sa;
  auto* sc = app.add_subcommand("scatter", "Poisson integral vs series and PDE residual");
  sc->add_option("--n", sa.n)->check(CLI::PositiveNumber);
  sc->add_option("--gamma", sa.gamma)->required();
  sc->add_option("--j", sa.j)->check(CLI::NonNegativeNumber);
  sc->add_option("--k", sa.k)->check(CLI::NonNegativeNumber);
  sc->add_option("--points", sa.points)->check(CLI::PositiveNumber);
  sc->add_option("--quad", sa.quad)->check(CLI::IsMember({"det", "mc"}));
  sc->add_option("--resolution", sa.resolution)->check(CLI::Range(4, 256));
  sc->add_option("--mc-nodes", sa.mc_nodes)->check(CLI::PositiveNumber);
  sc->add_option("--seed", sa.seed);
  sc->add_option("--tolerance", sa.tol);
  add_format(sc);

  int fk = 1, degree = 3, perturb = 0;
  std::string fa = "0";
  auto* fz = app.add_subcommand("factorize", "Exact check of the operator factorization");
  fz->add_option("--k", fk)->required();
  fz->add_option("--a", fa, "Rational parameter (p/q)")->required();
  fz->add_option("--n", n);
  fz->add_option("--degree", degree);
  fz->add_option("--perturb", perturb, "Perturb factor j (falsification control)");
  add_format(fz);

  TraceArgs ta;
  auto* tg = app.add_subcommand("trace-gap", "Radial energy identity, gap and symmetry");
  tg->add_option("--n", ta.n)->check(CLI::PositiveNumber);
  tg->add_option("--gamma", ta.gamma)->required();
  tg->add_option("--j", ta.j)->check(CLI::NonNegativeNumber);
  tg->add_option("--k", ta.k)->check(CLI::NonNegativeNumber);
  tg->add_option("--eps", ta.eps);
  tg->add_option("--nodes", ta.nodes)->check(CLI::Range(16, 4096));
  add_format(tg);

  bool quick = false;
  auto* va = app.add_subcommand("verify-all", "Run every acceptance criterion");
  va->add_flag("--quick", quick, "Skip the informational diagnostics");
  add_format(va);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Report r;
    if (*constants) r = cmd_constants(gamma, n);
    else if (*eig) r = cmd_eigenvalues(gamma, n, jmax, kmax);
    else if (*fh) r = cmd_funk_hecke(alpha, n, jmax, kmax, fh_tol);
    else if (*sc) r = cmd_scatter(sa);
    else if (*fz) r = cmd_factorize(fk, fa, n, degree, perturb);
    else if (*tg) r = cmd_trace_gap(ta);
    else r = cmd_verify_all(quick);
    emit(r, format, std::cout);
    return r.passed ? kExitOk : kExitFail;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
