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

#include "crtrace/formal_algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <vector>

#include "crtrace/constants.hpp"
#include "crtrace/errors.hpp"

namespace crtrace {

// --- GaussQ ---------------------------------------------------------------

std::string GaussQ::str() const {
  if (im == 0) return re.get_str();
  std::ostringstream os;
  os << "(" << re.get_str() << (sgn(im) < 0 ? " - " : " + ") << mpq_class(abs(im)).get_str() << "i)";
  return os.str();
}

GaussQ& GaussQ::operator+=(const GaussQ& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussQ& GaussQ::operator-=(const GaussQ& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussQ operator*(const GaussQ& a, const GaussQ& b) {
  return GaussQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

// --- SymbolPoly -----------------------------------------------------------

SymbolPoly SymbolPoly::constant(const GaussQ& c) { return monomial(0, 0, c); }

SymbolPoly SymbolPoly::monomial(int beta_pow, int theta_pow, const GaussQ& c) {
  SymbolPoly p;
  p.add_term({beta_pow, theta_pow}, c);
  return p;
}

void SymbolPoly::add_term(const Key& k, const GaussQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GaussQ SymbolPoly::coefficient(int beta_pow, int theta_pow) const {
  auto it = terms_.find({beta_pow, theta_pow});
  return it == terms_.end() ? GaussQ() : it->second;
}

SymbolPoly SymbolPoly::rescale(const mpq_class& s, const mpq_class& t) const {
  SymbolPoly out;
  for (const auto& [k, c] : terms_) {
    mpq_class f = 1;
    for (int i = 0; i < k.first; ++i) f *= s;
    for (int i = 0; i < k.second; ++i) f *= t;
    out.add_term(k, GaussQ(f) * c);
  }
  return out;
}

std::string SymbolPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (k.first) os << "*b^" << k.first;
    if (k.second) os << "*th^" << k.second;
  }
  return os.str();
}

SymbolPoly& SymbolPoly::operator+=(const SymbolPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SymbolPoly& SymbolPoly::operator-=(const SymbolPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
  SymbolPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

SymbolPoly operator*(const GaussQ& c, const SymbolPoly& p) {
  SymbolPoly out;
  for (const auto& [k, v] : p.terms_) out.add_term(k, c * v);
  return out;
}

// --- GradedExpansion ------------------------------------------------------

GradedExpansion GradedExpansion::monomial(const mpq_class& e, const SymbolPoly& p) {
  GradedExpansion x;
  x.add(e, p);
  return x;
}

SymbolPoly GradedExpansion::coefficient(const mpq_class& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? SymbolPoly() : it->second;
}

std::optional<mpq_class> GradedExpansion::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

void GradedExpansion::add(const mpq_class& e, const SymbolPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) terms_.erase(it);
}

GradedExpansion GradedExpansion::shifted(const mpq_class& de) const {
  GradedExpansion out;
  for (const auto& [e, p] : terms_) out.terms_.emplace(e + de, p);
  return out;
}

GradedExpansion GradedExpansion::truncated(const mpq_class& bound) const {
  GradedExpansion out;
  for (const auto& [e, p] : terms_)
    if (e < bound) out.terms_.emplace(e, p);
  return out;
}

std::string GradedExpansion::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, p] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "rho^(" << e.get_str() << ")*[" << p.str() << "]";
  }
  return os.str();
}

GradedExpansion& GradedExpansion::operator+=(const GradedExpansion& o) {
  for (const auto& [e, p] : o.terms_) add(e, p);
  return *this;
}

GradedExpansion& GradedExpansion::operator-=(const GradedExpansion& o) {
  for (const auto& [e, p] : o.terms_) add(e, GaussQ(-1) * p);
  return *this;
}

GradedExpansion operator*(const SymbolPoly& p, const GradedExpansion& x) {
  GradedExpansion out;
  for (const auto& [e, q] : x.terms_) out.add(e, p * q);
  return out;
}

// --- operators ------------------------------------------------------------

namespace {

const SymbolPoly& beta() {
  static const SymbolPoly b = SymbolPoly::monomial(1, 0);
  return b;
}

SymbolPoly theta_sq(const mpq_class& c) { return SymbolPoly::monomial(0, 2, GaussQ(c)); }

// Generic termwise operator: ρ^e p ↦ Σ_d ρ^{e+d} m_d(e) p.
using Termwise = std::function<void(const mpq_class& e, const SymbolPoly& p, GradedExpansion& out)>;

GradedExpansion apply_termwise(const GradedExpansion& x, const Termwise& op) {
  GradedExpansion out;
  for (const auto& [e, p] : x.terms()) op(e, p, out);
  return out;
}

GradedExpansion apply_D_scaled(const GradedExpansion& x, const mpq_class& shift,
                               const RationalGamma& g, const mpq_class& bs,
                               const mpq_class& ts) {
  mpq_class sp = g.s - shift;
  mpq_class c = 4 * sp * (g.n + 1 - sp);
  GradedExpansion out = apply_laplace_beltrami(x, g.n, bs, ts);
  for (const auto& [e, p] : x.terms()) out.add(e, GaussQ(c) * p);
  return out;
}

}  // namespace

GradedExpansion apply_laplace_beltrami(const GradedExpansion& x, int n,
                                       const mpq_class& beta_scale,
                                       const mpq_class& theta_scale) {
  SymbolPoly b = SymbolPoly::monomial(1, 0, GaussQ(beta_scale));
  SymbolPoly tt = theta_sq(mpq_class(-theta_scale * theta_scale / 4));
  return apply_termwise(x, [&](const mpq_class& e, const SymbolPoly& p, GradedExpansion& out) {
    out.add(e, GaussQ(mpq_class(e * (e - 2 - 2 * n))) * p);
    out.add(e + 2, b * p);
    out.add(e + 4, tt * p);
  });
}

GradedExpansion apply_D_s(const GradedExpansion& x, const mpq_class& shift,
                          const RationalGamma& g) {
  return apply_D_scaled(x, shift, g, 1, 1);
}

GradedExpansion apply_L2k(const GradedExpansion& x, const RationalGamma& g) {
  mpq_class conj = g.n + 1 - g.gamma;
  GradedExpansion y = x.shifted(conj);
  for (int j = 0; j < g.k; ++j) y = apply_D_s(y, j, g);
  y = y.shifted(-conj - 2 * g.k);
  return (g.k % 2) ? SymbolPoly::constant(-1) * y : y;
}

GradedExpansion apply_L2k_product_form(const GradedExpansion& x, const RationalGamma& g,
                                       ProductFormT convention) {
  mpq_class t2 = convention == ProductFormT::LiteralTwoDt ? mpq_class(-1) : mpq_class(-1, 4);
  mpq_class mixed = convention == ProductFormT::LiteralDt ? mpq_class(1, 2) : mpq_class(1);
  GradedExpansion y = x;
  for (int j = 1; j <= g.k; ++j) {
    SymbolPoly diag = beta() + SymbolPoly::monomial(0, 1, GaussQ(mixed * (g.k + 1 - 2 * j)));
    SymbolPoly tt = theta_sq(t2);
    y = apply_termwise(y, [&](const mpq_class& e, const SymbolPoly& p, GradedExpansion& out) {
      out.add(e - 2, GaussQ(mpq_class(e * (e - 2 * g.frac))) * p);
      out.add(e + 2, tt * p);
      out.add(e, diag * p);
    });
  }
  return (g.k % 2) ? SymbolPoly::constant(-1) * y : y;
}

// --- factorization --------------------------------------------------------

std::string FactorizationWitness::str() const {
  std::ostringstream os;
  os << "basis rho^(" << basis_exponent.get_str() << ") b^" << basis_beta << " th^"
     << basis_theta << ": term rho^(" << exponent.get_str() << ") b^" << beta_pow << " th^"
     << theta_pow << " lhs=" << lhs.str() << " rhs=" << rhs.str();
  return os.str();
}

FactorizationResult verify_factorization(int k, const mpq_class& a, int n, int test_degree,
                                         int perturb_factor) {
  if (k < 1 || k > 5 || n < 0 || n > 3 || test_degree < 0)
    throw DomainError("verify_factorization: need 1 <= k <= 5, 0 <= n <= 3");
  const mpq_class E = k - n - 1 - a;

  auto lhs_op = [&](const GradedExpansion& u) {
    GradedExpansion y = u.shifted(E);
    for (int j = 1; j <= k; ++j) {
      SymbolPoly diag = SymbolPoly::monomial(1, 0, GaussQ(mpq_class(1, 2))) +
                        SymbolPoly::monomial(0, 1, GaussQ(mpq_class(k + 1 - 2 * j, 2)));
      SymbolPoly tt = theta_sq(mpq_class(-1, 8));
      y = apply_termwise(y, [&](const mpq_class& e, const SymbolPoly& p, GradedExpansion& out) {
        out.add(e - 2, GaussQ(mpq_class(e * (e + 2 * a - 2) / 2)) * p);
        out.add(e + 2, tt * p);
        out.add(e, diag * p);
      });
    }
    return y;
  };
  auto rhs_op = [&](const GradedExpansion& u) {
    GradedExpansion y = u;
    for (int j = 1; j <= k; ++j) {
      mpq_class cj = a - k + 2 * j - (j == perturb_factor ? 1 : 2);
      mpq_class shift = mpq_class((n + 1) * (n + 1)) - cj * cj;
      GradedExpansion z = apply_laplace_beltrami(y, n);
      for (const auto& [e, p] : y.terms()) z.add(e, GaussQ(shift) * p);
      y = std::move(z);
    }
    mpq_class half_k = 1;
    for (int j = 0; j < k; ++j) half_k /= 2;
    return SymbolPoly::constant(GaussQ(half_k)) * y.shifted(-(k + n + 1 + a));
  };

  FactorizationResult res;
  for (const mpq_class& e0 : {mpq_class(0), mpq_class(1, 3)}) {
    for (int i = 0; i <= test_degree; ++i) {
      for (int p = 0; p <= test_degree; ++p) {
        for (int q = 0; p + q <= test_degree; ++q) {
          mpq_class e = e0 + 2 * i;
          GradedExpansion u = GradedExpansion::monomial(e, SymbolPoly::monomial(p, q));
          GradedExpansion L = lhs_op(u), R = rhs_op(u);
          ++res.basis_checked;
          GradedExpansion diff = L - R;
          if (diff.is_zero()) continue;
          const auto& [de, dp] = *diff.terms().begin();
          const auto& [key, c] = *dp.terms().begin();
          FactorizationWitness w;
          w.exponent = de;
          w.beta_pow = key.first;
          w.theta_pow = key.second;
          w.lhs = L.coefficient(de).coefficient(key.first, key.second);
          w.rhs = R.coefficient(de).coefficient(key.first, key.second);
          w.basis_exponent = e;
          w.basis_beta = p;
          w.basis_theta = q;
          res.witness = w;
          res.holds = false;
          return res;
        }
      }
    }
  }
  res.holds = true;
  return res;
}

// --- boundary operators ---------------------------------------------------

mpq_class BoundaryIndex::order(const RationalGamma& g) const {
  return kind == BoundaryKind::Integer ? mpq_class(2 * j) : mpq_class(2 * j + 2 * g.frac);
}

bool boundary_index_valid(const BoundaryIndex& idx, const RationalGamma& g) {
  if (idx.j < 0) return false;
  if (idx.kind == BoundaryKind::Integer) return idx.j <= g.half_floor();
  return idx.j <= g.floor - g.half_floor() - 1;
}

namespace {

// Shifts ℓ of the D-factors in the boundary operator of index idx.
std::vector<int> boundary_shifts(const BoundaryIndex& idx, const RationalGamma& g) {
  std::vector<int> shifts;
  int first_top = idx.kind == BoundaryKind::Integer ? idx.j - 1 : idx.j;
  for (int l = 0; l <= first_top; ++l) shifts.push_back(l);
  for (int l = g.floor - idx.j + 1; l <= g.floor; ++l) shifts.push_back(l);
  return shifts;
}

mpq_class boundary_b(const BoundaryIndex& idx, const RationalGamma& g) {
  GammaMonomial b = idx.kind == BoundaryKind::Integer ? b_lower_closed(g, idx.j)
                                                      : b_frac_closed(g, idx.j);
  if (!b.is_rational() || b.is_zero())
    throw MismatchError("boundary constant is not a nonzero rational");
  return b.coeff();
}

// Unnormalized operator on one expansion, with symbol scales.
SymbolPoly boundary_raw(const GradedExpansion& x, const BoundaryIndex& idx,
                        const RationalGamma& g, const mpq_class& bs, const mpq_class& ts) {
  mpq_class conj = g.n + 1 - g.gamma;
  GradedExpansion y = x.shifted(conj);
  for (int l : boundary_shifts(idx, g)) y = apply_D_scaled(y, l, g, bs, ts);
  y = y.shifted(-conj - idx.order(g));
  for (const auto& [e, p] : y.terms()) {
    if (e < 0)
      throw DomainError("boundary operator: negative grade rho^(" + e.get_str() +
                        ") survives; input not in the graded class");
    break;
  }
  return y.coefficient(0);
}

void require_valid(const BoundaryIndex& idx, const RationalGamma& g) {
  if (!boundary_index_valid(idx, g))
    throw DomainError("boundary operator index out of range: j=" + std::to_string(idx.j));
}

}  // namespace

SymbolPoly apply_boundary_op(const GradedExpansion& e, const BoundaryIndex& idx,
                             const RationalGamma& g) {
  require_valid(idx, g);
  mpq_class b = boundary_b(idx, g);
  return GaussQ(mpq_class(1 / b)) * boundary_raw(e, idx, g, 1, 1);
}

SymbolPoly apply_boundary_op_dilated(const GradedExpansion& e, const BoundaryIndex& idx,
                                     const mpq_class& c, const RationalGamma& g) {
  require_valid(idx, g);
  if (c <= 0) throw DomainError("dilation factor must be positive");
  mpq_class b = boundary_b(idx, g);
  mpq_class inv_c2 = 1 / (c * c);
  mpq_class q0 = idx.kind == BoundaryKind::Integer ? mpq_class(0) : 2 * g.frac;
  SymbolPoly out;
  // e = Σ ρ^x p_x = Σ ρ̂^x c^{-x} p_x; the operator is linear, so work
  // grade by grade and only demand c^{-(x-q0)} rational where it matters.
  for (const auto& [x, p] : e.terms()) {
    SymbolPoly v = boundary_raw(GradedExpansion::monomial(x, p), idx, g, inv_c2, inv_c2);
    if (v.is_zero()) continue;
    mpq_class scale;
    if (!rational_power(c, -(x - q0), &scale))
      throw DomainError("dilated boundary operator: irrational scale at grade " + x.get_str());
    out += GaussQ(scale) * v;
  }
  return GaussQ(mpq_class(1 / b)) * out;
}

bool in_graded_class(const GradedExpansion& e, const RationalGamma& g) {
  auto even_nonneg = [](const mpq_class& y) {
    return y.get_den() == 1 && y >= 0 && y.get_num() % 2 == 0;
  };
  for (const auto& [x, p] : e.terms())
    if (!even_nonneg(x) && !even_nonneg(x - 2 * g.frac)) return false;
  return true;
}

Reconstruction reconstruct_series(const GradedExpansion& e, const RationalGamma& g, int depth) {
  if (!in_graded_class(e, g)) throw DomainError("reconstruct_series: input not in graded class");
  struct Order {
    mpq_class value;
    BoundaryIndex idx;
  };
  std::vector<Order> orders;
  for (int m = 0; m < depth; ++m) {
    orders.push_back({mpq_class(2 * m), {BoundaryKind::Integer, m}});
    orders.push_back({mpq_class(2 * m + 2 * g.frac), {BoundaryKind::Frac, m}});
  }
  std::sort(orders.begin(), orders.end(),
            [](const Order& a, const Order& b) { return a.value < b.value; });

  Reconstruction rec;
  GradedExpansion same_branch[2];  // partial sums per branch
  for (const auto& o : orders) {
    int branch = o.idx.kind == BoundaryKind::Integer ? 0 : 1;
    SymbolPoly f;
    bool via_op = boundary_index_valid(o.idx, g);
    if (via_op) {
      f = apply_boundary_op(e - same_branch[branch], o.idx, g);
    } else {
      GradedExpansion rem = e - same_branch[0] - same_branch[1];
      if (auto m = rem.min_exponent(); m && *m < o.value)
        throw MismatchError("reconstruct_series: lower grade left in remainder");
      f = rem.coefficient(o.value);
    }
    rec.from_operator[o.value] = via_op;
    same_branch[branch].add(o.value, f);
    rec.series.add(o.value, f);
  }
  return rec;
}

bool covariance_constant_factor(const GradedExpansion& e, const mpq_class& c,
                                const BoundaryIndex& idx, const RationalGamma& g) {
  SymbolPoly lhs = apply_boundary_op_dilated(e, idx, c, g);
  // c^{-(n+1)+γ-α} c^{n+1-γ} = c^{-α}; the c^{-2[γ]} of the Frac kind is
  // divided out on both sides.
  mpq_class scale = 1;
  for (int i = 0; i < 2 * idx.j; ++i) scale /= c;
  SymbolPoly rhs = GaussQ(scale) * apply_boundary_op(e, idx, g);
  return lhs == rhs;
}

}  // namespace crtrace
