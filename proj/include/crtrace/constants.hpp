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

#include <map>
#include <string>
#include <vector>

#include "crtrace/exact.hpp"

namespace crtrace {

// coeff · 2^pow2 · Π Γ(r)^e over r ∈ (0,1). Every Γ at a non-integer
// rational is reduced to its fractional representative by the Pochhammer
// recurrence, so products and ratios of Gammas with integer offsets stay
// exact. pow2 is kept in [0,1); the integer part lives in coeff.
class GammaMonomial {
 public:
  GammaMonomial() = default;

  static GammaMonomial rational(const mpq_class& q);
  static GammaMonomial power_of_two(const mpq_class& e);
  // Γ(x); DomainError at the poles x ∈ {0,-1,-2,...}.
  static GammaMonomial gamma(const mpq_class& x);
  // Π Γ(num) / Π Γ(den). Poles are matched by order: an excess in the
  // denominator gives an exact zero, an excess in the numerator throws, equal
  // counts are resolved through residues.
  static GammaMonomial ratio(const std::vector<mpq_class>& num,
                             const std::vector<mpq_class>& den);

  const mpq_class& coeff() const { return coeff_; }
  const mpq_class& pow2() const { return pow2_; }
  const std::map<mpq_class, int>& gammas() const { return gammas_; }

  bool is_zero() const { return coeff_ == 0; }
  bool is_rational() const { return coeff_ == 0 || (pow2_ == 0 && gammas_.empty()); }
  int sign() const { return sgn(coeff_); }
  double value() const;
  std::string str() const;

  GammaMonomial operator-() const;
  friend GammaMonomial operator*(const GammaMonomial& a, const GammaMonomial& b);
  friend GammaMonomial operator/(const GammaMonomial& a, const GammaMonomial& b);
  friend bool operator==(const GammaMonomial& a, const GammaMonomial& b);

 private:
  void normalize();

  mpq_class coeff_ = 0;
  mpq_class pow2_ = 0;
  std::map<mpq_class, int> gammas_;
};

// c_x = 2^x Γ(x)/Γ(-x), exact form.
GammaMonomial c_gamma_exact(const mpq_class& x);

// Normalizing constants of the boundary operators. "closed" is the
// Gamma-ratio form, "product" the eigenvalue product it must equal.
GammaMonomial b_lower_closed(const RationalGamma& g, int j);
mpq_class b_lower_product(const RationalGamma& g, int j);
GammaMonomial b_frac_closed(const RationalGamma& g, int j);
mpq_class b_frac_product(const RationalGamma& g, int j);
// Upper range ⌊γ/2⌋+1 ≤ j ≤ ⌊γ⌋, defined through the solution operator.
GammaMonomial b_upper_closed(const RationalGamma& g, int j);
mpq_class b_upper_product(const RationalGamma& g, int j);
// b_{2j+2[γ]} for ⌊γ⌋-⌊γ/2⌋ ≤ j ≤ ⌊γ⌋ (product form only).
mpq_class b_upper_frac_product(const RationalGamma& g, int j);
// b_{2γ-2j}, 0 ≤ j ≤ ⌊γ/2⌋.
GammaMonomial b_mirror_closed(const RationalGamma& g, int j);
mpq_class b_mirror_product(const RationalGamma& g, int j);

GammaMonomial sigma_closed(const RationalGamma& g, int j);
GammaMonomial varsigma_closed(const RationalGamma& g, int j);

// 2^{1-2γ} γ Γ(1-γ)/Γ(1+γ), the sharp constant of the order-γ < 1 trace
// inequality.
GammaMonomial frank_constant(const mpq_class& gamma);

struct ConstantsTable {
  RationalGamma g;
  std::vector<GammaMonomial> b_lower;         // j = 0..⌊γ⌋
  std::vector<GammaMonomial> b_frac;          // j = 0..⌊γ⌋
  std::map<int, GammaMonomial> b_upper;       // j = ⌊γ/2⌋+1..⌊γ⌋
  std::map<int, GammaMonomial> b_upper_frac;  // j = ⌊γ⌋-⌊γ/2⌋..⌊γ⌋
  std::vector<GammaMonomial> b_mirror;        // j = 0..⌊γ/2⌋
  std::vector<GammaMonomial> sigma;           // j = 0..⌊γ⌋
  std::vector<GammaMonomial> varsigma;        // j = 0..⌊γ⌋
};

// Builds every entry twice (closed form and product) and throws
// MismatchError if any pair differs.
ConstantsTable build_table(const mpq_class& gamma, int n);

struct RelationCheck {
  std::string name;
  bool passed = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool ok() const;
};

// σ_j against b_{2γ-2j} / b_{2j}, ς_j against σ_j and c, positivity of ς,
// the mirror identity and the declared vanishing ranges.
RelationReport relation_check(const ConstantsTable& t);

}  // namespace crtrace
