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
#include <optional>
#include <string>
#include <utility>

#include "crtrace/exact.hpp"

namespace crtrace {

// a + b i with a, b ∈ ℚ.
struct GaussQ {
  mpq_class re = 0;
  mpq_class im = 0;

  GaussQ() = default;
  GaussQ(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussQ(int r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }
  std::string str() const;

  GaussQ& operator+=(const GaussQ& o);
  GaussQ& operator-=(const GaussQ& o);
  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator-(const GaussQ& a) { return GaussQ(-a.re, -a.im); }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b);
  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
};

// Polynomial in β (stands for Δ_b) and θ (T = 2∂_t acts as iθ, so ∂_tt acts
// as -θ²/4). Keys are (β-power, θ-power).
class SymbolPoly {
 public:
  using Key = std::pair<int, int>;

  SymbolPoly() = default;
  static SymbolPoly constant(const GaussQ& c);
  static SymbolPoly monomial(int beta_pow, int theta_pow, const GaussQ& c = 1);

  const std::map<Key, GaussQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussQ coefficient(int beta_pow, int theta_pow) const;
  // β ↦ sβ, θ ↦ tθ
  SymbolPoly rescale(const mpq_class& s, const mpq_class& t) const;
  std::string str() const;

  SymbolPoly& operator+=(const SymbolPoly& o);
  SymbolPoly& operator-=(const SymbolPoly& o);
  friend SymbolPoly operator+(SymbolPoly a, const SymbolPoly& b) { return a += b; }
  friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly& b) { return a -= b; }
  friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b);
  friend SymbolPoly operator*(const GaussQ& c, const SymbolPoly& p);
  friend bool operator==(const SymbolPoly& a, const SymbolPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Key& k, const GaussQ& c);
  std::map<Key, GaussQ> terms_;
};

// Σ ρ^e p_e with exact rational exponents and symbol coefficients.
class GradedExpansion {
 public:
  GradedExpansion() = default;
  static GradedExpansion monomial(const mpq_class& e, const SymbolPoly& p);

  const std::map<mpq_class, SymbolPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  SymbolPoly coefficient(const mpq_class& e) const;
  std::optional<mpq_class> min_exponent() const;

  void add(const mpq_class& e, const SymbolPoly& p);
  GradedExpansion shifted(const mpq_class& de) const;  // ρ^{de} ·
  // Keeps grades e < bound.
  GradedExpansion truncated(const mpq_class& bound) const;
  std::string str() const;

  GradedExpansion& operator+=(const GradedExpansion& o);
  GradedExpansion& operator-=(const GradedExpansion& o);
  friend GradedExpansion operator+(GradedExpansion a, const GradedExpansion& b) { return a += b; }
  friend GradedExpansion operator-(GradedExpansion a, const GradedExpansion& b) { return a -= b; }
  friend GradedExpansion operator*(const SymbolPoly& p, const GradedExpansion& e);
  friend bool operator==(const GradedExpansion& a, const GradedExpansion& b) { return a.terms_ == b.terms_; }

 private:
  std::map<mpq_class, SymbolPoly> terms_;
};

// Δ_B = ρ²∂_ρρ + ρ²Δ_b + ρ⁴∂_tt - (2n+1)ρ∂_ρ on the Siegel domain.
// beta_scale / theta_scale rescale the symbols (used for dilated defining
// functions); both default to 1.
GradedExpansion apply_laplace_beltrami(const GradedExpansion& e, int n,
                                       const mpq_class& beta_scale = 1,
                                       const mpq_class& theta_scale = 1);

// D_{s-shift} = Δ_B + 4(s-shift)(n+1-s+shift) = Δ̃_B - (γ-2 shift)².
GradedExpansion apply_D_s(const GradedExpansion& e, const mpq_class& shift,
                          const RationalGamma& g);

// (-1)^k ρ^{-(n+1)+γ-2k} ∘ Π_{j<k} D_{s-j} ∘ ρ^{n+1-γ}
GradedExpansion apply_L2k(const GradedExpansion& e, const RationalGamma& g);

// How the radial-first product form of L_{2k} reads the symbol T.
enum class ProductFormT {
  Consistent,    // ρ²∂_tt and -2i(k+1-2j)∂_t, i.e. ρ²T²/4 - i(k+1-2j)T
  LiteralTwoDt,  // ρ²T² - i(k+1-2j)T with T = 2∂_t
  LiteralDt,     // ρ²T² - i(k+1-2j)T with T = ∂_t
};

// (-1)^k Π_{j=1}^{k}[∂_ρρ + (1-2[γ])ρ^{-1}∂_ρ + ρ²T² + Δ_b - i(k+1-2j)T]
// evaluated directly, as an independent oracle for apply_L2k.
GradedExpansion apply_L2k_product_form(const GradedExpansion& e, const RationalGamma& g,
                                       ProductFormT convention = ProductFormT::Consistent);

struct FactorizationWitness {
  mpq_class exponent;  // ρ-exponent of the offending term
  int beta_pow = 0;
  int theta_pow = 0;
  GaussQ lhs;
  GaussQ rhs;
  mpq_class basis_exponent;  // basis element ρ^e β^p θ^q that exposed it
  int basis_beta = 0;
  int basis_theta = 0;
  std::string str() const;
};

struct FactorizationResult {
  bool holds = false;
  long basis_checked = 0;
  std::optional<FactorizationWitness> witness;
};

// Checks
//   Π_{j=1}^{k}[q∂_qq + a∂_q + qT² - ℒ₀ - i(k+1-2j)T] (q^{(k-n-1-a)/2} u)
//     = 4^{-k} q^{-(k+n+1+a)/2} Π_{j=1}^{k}[Δ_B + (n+1)² - (a-k+2j-2)²] u
// with q = ρ²/2, ℒ₀ = -Δ_b/2, T = ∂_t, on the basis ρ^{e0+2i} β^p θ^q for
// e0 ∈ {0, 1/3}, i ≤ test_degree, p+q ≤ test_degree. The common irrational
// factor 2^{-(k-n-1-a)/2} is divided out of both sides. perturb_factor = j
// replaces (a-k+2j-2) by (a-k+2j-1) in factor j (falsification control).
FactorizationResult verify_factorization(int k, const mpq_class& a, int n, int test_degree,
                                         int perturb_factor = 0);

enum class BoundaryKind { Integer, Frac };

struct BoundaryIndex {
  BoundaryKind kind = BoundaryKind::Integer;
  int j = 0;
  // ρ-order of the coefficient it extracts: 2j or 2j + 2[γ].
  mpq_class order(const RationalGamma& g) const;
};

bool boundary_index_valid(const BoundaryIndex& idx, const RationalGamma& g);

// B^{2γ}_{2j} / B^{2γ}_{2j+2[γ]}: conjugate by ρ^{n+1-γ}, apply the two
// partial D-products, multiply by the matching negative ρ-power, divide by
// the exact b-constant and read off the ρ⁰ grade. Throws DomainError for an
// index outside its range or when a negative grade survives.
SymbolPoly apply_boundary_op(const GradedExpansion& e, const BoundaryIndex& idx,
                             const RationalGamma& g);

// Same operator built from the defining function ρ̂ = cρ. In hatted
// coordinates Δ_b and ∂_t pick up c^{-2}, so β ↦ β/c², θ ↦ θ/c².
// Returns the value divided by c^{-2[γ]} for the Frac kind (that irrational
// factor is common to both sides of the covariance identity).
SymbolPoly apply_boundary_op_dilated(const GradedExpansion& e, const BoundaryIndex& idx,
                                     const mpq_class& c, const RationalGamma& g);

// True iff every exponent is 2m or 2[γ]+2m with m ≥ 0.
bool in_graded_class(const GradedExpansion& e, const RationalGamma& g);

struct Reconstruction {
  GradedExpansion series;
  // Orders whose coefficient came from a boundary operator (rest by direct
  // read-off of the remainder, where no boundary operator is defined).
  std::map<mpq_class, bool> from_operator;
};

// Rebuilds Σ_{m<depth} ρ^{2m} f_{2m} + ρ^{2m+2[γ]} f_{2m+2[γ]} from e.
Reconstruction reconstruct_series(const GradedExpansion& e, const RationalGamma& g, int depth);

// B̂(e) = c^{-(n+1)+γ-α} B(c^{n+1-γ} e) for constant conformal factor c
// (α = order of the index), checked exactly.
bool covariance_constant_factor(const GradedExpansion& e, const mpq_class& c,
                                const BoundaryIndex& idx, const RationalGamma& g);

}  // namespace crtrace
