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

#include <gtest/gtest.h>

#include <random>

#include "crtrace/errors.hpp"
#include "crtrace/exact.hpp"
#include "crtrace/formal_algebra.hpp"

namespace crtrace {
namespace {

RationalGamma rg(const char* g, int n) { return RationalGamma::make(parse_rational(g), n); }

SymbolPoly one() { return SymbolPoly::constant(1); }

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
  if (p.is_zero()) p = one();
  return p;
}

GradedExpansion random_expansion(std::mt19937_64& rng, const RationalGamma& g, int depth) {
  GradedExpansion e;
  for (int m = 0; m < depth; ++m) {
    e.add(mpq_class(2 * m), random_symbol(rng));
    e.add(2 * m + 2 * g.frac, random_symbol(rng));
  }
  return e;
}

// (Δ̃_B - γ²) conjugated by ρ^{n+1-γ}, with the sign and weight of L_2.
GradedExpansion l2_oracle(const GradedExpansion& e, const RationalGamma& g) {
  const mpq_class m = g.n + 1 - g.gamma;
  const GradedExpansion up = e.shifted(m);
  GradedExpansion v = apply_laplace_beltrami(up, g.n);
  const mpq_class c = (g.n + 1) * (g.n + 1) - g.gamma * g.gamma;
  v += SymbolPoly::constant(GaussQ(c)) * up;
  return SymbolPoly::constant(-1) * v.shifted(-m - 2);
}

TEST(SymbolAlgebra, Basics) {
  const SymbolPoly a = SymbolPoly::monomial(1, 0, GaussQ(mpq_class(1, 2)));
  const SymbolPoly b = SymbolPoly::monomial(0, 2, GaussQ(0, 3));
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ((a * b).coefficient(1, 2), GaussQ(0, mpq_class(3, 2)));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(GaussQ(0, 1) * GaussQ(0, 1), GaussQ(-1));
  EXPECT_EQ((a * b).rescale(2, 3).coefficient(1, 2), GaussQ(0, 27));
  GradedExpansion e = GradedExpansion::monomial(mpq_class(1, 3), a);
  e.add(mpq_class(1, 3), -1 * a);
  EXPECT_TRUE(e.is_zero());
}

TEST(LaplaceBeltrami, Examples) {
  // Constant: radial part vanishes.
  const GradedExpansion c = apply_laplace_beltrami(GradedExpansion::monomial(0, one()), 1);
  GradedExpansion want;
  want.add(2, SymbolPoly::monomial(1, 0));
  want.add(4, SymbolPoly::monomial(0, 2, GaussQ(mpq_class(-1, 4))));
  EXPECT_EQ(c, want);
  // Lowest grade of ρ^{n+1-γ}: (Δ_B + (n+1)²) gives γ².
  for (const char* gs : {"1/3", "5/2"})
    for (int n : {1, 2, 3}) {
      const RationalGamma g = rg(gs, n);
      const mpq_class m = n + 1 - g.gamma;
      const GradedExpansion v = apply_laplace_beltrami(GradedExpansion::monomial(m, one()), n);
      EXPECT_EQ(v.coefficient(m), SymbolPoly::constant(GaussQ(mpq_class(g.gamma * g.gamma - (n + 1) * (n + 1)))));
    }
}

TEST(LaplaceBeltrami, Linear) {
  std::mt19937_64 rng(3);
  const RationalGamma g = rg("1/3", 2);
  for (int i = 0; i < 5; ++i) {
    const GradedExpansion a = random_expansion(rng, g, 3), b = random_expansion(rng, g, 3);
    const SymbolPoly s = random_symbol(rng);
    EXPECT_EQ(apply_laplace_beltrami(a + s * b, 2), apply_laplace_beltrami(a, 2) + s * apply_laplace_beltrami(b, 2));
  }
}

TEST(DOperator, LowestGradeAndCommutation) {
  std::mt19937_64 rng(5);
  for (const char* gs : {"1/3", "3/2", "5/2"}) {
    const RationalGamma g = rg(gs, 1);
    EXPECT_EQ(4 * g.s * (g.n + 1 - g.s), (g.n + 1) * (g.n + 1) - g.gamma * g.gamma);
    const mpq_class m = g.n + 1 - g.gamma;
    const GradedExpansion v = apply_D_s(GradedExpansion::monomial(m, one()), 0, g);
    EXPECT_TRUE(v.coefficient(m).is_zero());
    const GradedExpansion e = random_expansion(rng, g, 3);
    EXPECT_EQ(apply_D_s(apply_D_s(e, 1, g), 0, g), apply_D_s(apply_D_s(e, 0, g), 1, g));
  }
}

TEST(L2k, FirstOrderAgainstOracle) {
  std::mt19937_64 rng(7);
  for (const char* gs : {"1/3", "1/2", "4/5"})
    for (int n : {1, 2}) {
      const RationalGamma g = rg(gs, n);
      // L_2(1) = -β + ρ²θ²/4 by hand.
      GradedExpansion hand;
      hand.add(0, SymbolPoly::monomial(1, 0, -1));
      hand.add(2, SymbolPoly::monomial(0, 2, GaussQ(mpq_class(1, 4))));
      EXPECT_EQ(apply_L2k(GradedExpansion::monomial(0, one()), g), hand);
      const GradedExpansion e = random_expansion(rng, g, 3);
      EXPECT_EQ(apply_L2k(e, g), l2_oracle(e, g));
    }
  EXPECT_TRUE(apply_L2k(GradedExpansion(), rg("1/2", 1)).is_zero());
}

TEST(L2k, ScatteringGradeAnnihilated) {
  for (const char* gs : {"1/3", "3/2", "5/2", "7/2"}) {
    const RationalGamma g = rg(gs, 1);
    for (int j = 0; j <= g.half_floor(); ++j) {
      const mpq_class e0 = 2 * g.gamma - 2 * j;
      const GradedExpansion v = apply_L2k(GradedExpansion::monomial(e0, one()), g);
      const auto lo = v.min_exponent();
      if (lo) EXPECT_GT(*lo, e0 - 2 * g.k) << gs << " j=" << j;
      EXPECT_TRUE(v.coefficient(e0 - 2 * g.k).is_zero()) << gs << " j=" << j;
    }
  }
}

TEST(L2k, ProductForm) {
  std::mt19937_64 rng(9);
  for (const char* gs : {"1/3", "3/2", "7/3"}) {
    const RationalGamma g = rg(gs, 1);
    const GradedExpansion e = random_expansion(rng, g, 3);
    EXPECT_EQ(apply_L2k_product_form(e, g, ProductFormT::Consistent), apply_L2k(e, g)) << gs;
  }
  // The literal T-conventions only coincide when k = 1 kills the T-term.
  const RationalGamma g2 = rg("3/2", 1);
  const GradedExpansion e = GradedExpansion::monomial(0, SymbolPoly::monomial(0, 1));
  EXPECT_FALSE(apply_L2k_product_form(e, g2, ProductFormT::LiteralDt) == apply_L2k(e, g2));
}

TEST(Factorization, HoldsAndFalsifies) {
  const mpq_class g(1, 3);
  const FactorizationResult r1 = verify_factorization(1, 1 - 2 * g, 1, 4);
  EXPECT_TRUE(r1.holds);
  EXPECT_GT(r1.basis_checked, 0);
  EXPECT_FALSE(r1.witness.has_value());
  EXPECT_TRUE(verify_factorization(2, 0, 2, 4).holds);
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 3; ++n) EXPECT_TRUE(verify_factorization(k, mpq_class(1, 5), n, 3).holds) << k << n;
  const FactorizationResult bad = verify_factorization(2, 0, 2, 4, 1);
  EXPECT_FALSE(bad.holds);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_FALSE(bad.witness->lhs == bad.witness->rhs);
  EXPECT_FALSE(bad.witness->str().empty());
  EXPECT_THROW(verify_factorization(6, 0, 1, 2), DomainError);
}

TEST(BoundaryOperators, NormalizationAndAnnihilation) {
  std::mt19937_64 rng(11);
  for (const char* gs : {"1/2", "4/3", "5/2", "11/3"}) {
    const RationalGamma g = rg(gs, 1);
    std::vector<BoundaryIndex> idx;
    for (int j = 0; j <= g.half_floor(); ++j) idx.push_back({BoundaryKind::Integer, j});
    for (int j = 0; j <= g.floor - g.half_floor() - 1; ++j) idx.push_back({BoundaryKind::Frac, j});
    for (const auto& i : idx) {
      ASSERT_TRUE(boundary_index_valid(i, g));
      const mpq_class ord = i.order(g);
      EXPECT_EQ(apply_boundary_op(GradedExpansion::monomial(ord, one()), i, g), one()) << gs;
      const mpq_class other = i.kind == BoundaryKind::Integer ? mpq_class(2 * g.frac) : mpq_class(0);
      for (int m = 0; m < 4; ++m)
        EXPECT_TRUE(apply_boundary_op(GradedExpansion::monomial(other + 2 * m, random_symbol(rng)), i, g).is_zero());
      // Higher grades on the same branch do not leak into the read-off.
      const SymbolPoly p = random_symbol(rng);
      GradedExpansion e = GradedExpansion::monomial(ord, p);
      e.add(ord + 2, random_symbol(rng));
      e.add(ord + 4, random_symbol(rng));
      EXPECT_EQ(apply_boundary_op(e, i, g), p);
    }
    EXPECT_FALSE(boundary_index_valid({BoundaryKind::Integer, g.half_floor() + 1}, g));
    EXPECT_THROW(apply_boundary_op(GradedExpansion::monomial(0, one()), {BoundaryKind::Integer, g.half_floor() + 1}, g),
                 DomainError);
  }
  // γ ∈ (0,1) has no frac-kind operator.
  EXPECT_FALSE(boundary_index_valid({BoundaryKind::Frac, 0}, rg("1/2", 1)));
}

TEST(Reconstruction, Exact) {
  std::mt19937_64 rng(13);
  for (const char* gs : {"1/2", "4/3", "5/2"}) {
    const RationalGamma g = rg(gs, 1);
    EXPECT_TRUE(reconstruct_series(GradedExpansion(), g, 4).series.is_zero());
    GradedExpansion two = GradedExpansion::monomial(2, one());
    two.add(2 * g.frac, one());
    EXPECT_EQ(reconstruct_series(two, g, 4).series, two);
    const GradedExpansion e = random_expansion(rng, g, 3);
    const Reconstruction r = reconstruct_series(e, g, 3);
    EXPECT_EQ(r.series, e);
    bool any = false;
    for (const auto& [ord, op] : r.from_operator) any = any || op;
    EXPECT_TRUE(any);
  }
  EXPECT_THROW(reconstruct_series(GradedExpansion::monomial(mpq_class(1, 7), one()), rg("1/2", 1), 3),
               DomainError);
}

TEST(Covariance, ConstantDilation) {
  std::mt19937_64 rng(17);
  for (const char* gs : {"1/2", "4/3", "5/2"}) {
    const RationalGamma g = rg(gs, 1);
    for (int j = 0; j <= g.half_floor(); ++j) {
      const BoundaryIndex i{BoundaryKind::Integer, j};
      const GradedExpansion mono = GradedExpansion::monomial(2 * j, one());
      EXPECT_TRUE(covariance_constant_factor(mono, 1, i, g));
      EXPECT_TRUE(covariance_constant_factor(mono, 2, i, g));
      // Hand value: the dilated operator on ρ^{2j} is c^{-2j}.
      EXPECT_EQ(apply_boundary_op_dilated(mono, i, 2, g), SymbolPoly::constant(GaussQ(mpq_class(1, 1 << (2 * j)))));
      GradedExpansion e;
      for (int m = 0; m < 3; ++m) e.add(mpq_class(2 * m), random_symbol(rng));
      EXPECT_TRUE(covariance_constant_factor(e, 3, i, g));
    }
    for (int j = 0; j <= g.floor - g.half_floor() - 1; ++j) {
      const BoundaryIndex i{BoundaryKind::Frac, j};
      GradedExpansion e;
      for (int m = 0; m < 3; ++m) e.add(2 * m + 2 * g.frac, random_symbol(rng));
      EXPECT_TRUE(covariance_constant_factor(e, 2, i, g)) << gs;
    }
  }
  EXPECT_THROW(apply_boundary_op_dilated(GradedExpansion::monomial(0, one()), {BoundaryKind::Integer, 0}, 0,
                                         rg("1/2", 1)),
               DomainError);
}

TEST(GradedClass, Membership) {
  std::mt19937_64 rng(19);
  const RationalGamma g = rg("4/3", 1);
  EXPECT_TRUE(in_graded_class(random_expansion(rng, g, 4), g));
  EXPECT_TRUE(in_graded_class(GradedExpansion(), g));
  EXPECT_FALSE(in_graded_class(GradedExpansion::monomial(1, one()), g));
  EXPECT_FALSE(in_graded_class(GradedExpansion::monomial(-2, one()), g));
}

}  // namespace
}  // namespace crtrace
