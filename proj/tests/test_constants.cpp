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

#include <cmath>

#include "crtrace/constants.hpp"
#include "crtrace/errors.hpp"
#include "crtrace/exact.hpp"

namespace crtrace {
namespace {

RationalGamma rg(const char* g, int n) { return RationalGamma::make(parse_rational(g), n); }

TEST(GammaMonomial, Arithmetic) {
  const GammaMonomial half = GammaMonomial::gamma(mpq_class(1, 2));
  EXPECT_NEAR(half.value(), std::sqrt(M_PI), 1e-15);
  // Γ(7/2)/Γ(1/2) = 15/8 reduces to a rational.
  const GammaMonomial r = GammaMonomial::ratio({mpq_class(7, 2)}, {mpq_class(1, 2)});
  EXPECT_TRUE(r.is_rational());
  EXPECT_EQ(r.coeff(), mpq_class(15, 8));
  EXPECT_THROW(GammaMonomial::gamma(mpq_class(-2)), DomainError);
  // Pole in the denominator only: exact zero.
  EXPECT_TRUE(GammaMonomial::ratio({mpq_class(1)}, {mpq_class(-1)}).is_zero());
  // Matched poles resolve through residues: Γ(-1)/Γ(-2) = -2.
  const GammaMonomial m = GammaMonomial::ratio({mpq_class(-1)}, {mpq_class(-2)});
  EXPECT_TRUE(m.is_rational());
  EXPECT_EQ(m.coeff(), mpq_class(-2));
  const GammaMonomial p = GammaMonomial::power_of_two(mpq_class(3, 2)) * half;
  EXPECT_NEAR(p.value(), std::pow(2.0, 1.5) * std::sqrt(M_PI), 1e-14);
  EXPECT_EQ(p / p, GammaMonomial::rational(1));
}

TEST(CGammaExact, MatchesFloatingForm) {
  for (const char* x : {"1/2", "3/2", "-1/3", "5/4"}) {
    const mpq_class q = parse_rational(x);
    const double d = q.get_d();
    const double want = std::pow(2.0, d) * std::tgamma(d) / std::tgamma(-d);
    EXPECT_NEAR(c_gamma_exact(q).value(), want, 1e-13 * std::fabs(want)) << x;
  }
}

TEST(Constants, HandValues) {
  const ConstantsTable t = build_table(parse_rational("3/2"), 1);
  // ((⌊γ⌋ - [γ])² - γ²) = -4[γ]⌊γ⌋ = -2.
  ASSERT_TRUE(t.b_frac[0].is_rational());
  EXPECT_EQ(t.b_frac[0].coeff(), mpq_class(-2));
  EXPECT_EQ(b_frac_product(t.g, 0), mpq_class(-2));
  for (const char* g : {"1/3", "3/2", "5/2", "7/3"}) {
    const ConstantsTable u = build_table(parse_rational(g), 2);
    EXPECT_EQ(u.b_lower[0], GammaMonomial::rational(1)) << g;
    EXPECT_EQ(b_lower_product(u.g, 0), mpq_class(1));
  }
  // The product form vanishes above ⌊γ/2⌋.
  EXPECT_EQ(b_lower_product(rg("3/2", 1), 1), mpq_class(0));
  EXPECT_EQ(b_lower_product(rg("7/3", 1), 2), mpq_class(0));
}

TEST(Constants, LowestOrderAgainstFrankConstant) {
  for (const char* gs : {"1/5", "1/3", "1/2", "3/4", "9/10"}) {
    const mpq_class gq = parse_rational(gs);
    const double g = gq.get_d();
    for (int n : {1, 2, 3}) {
      const ConstantsTable t = build_table(gq, n);
      EXPECT_TRUE(t.sigma[0].is_rational());
      EXPECT_EQ(t.sigma[0].coeff(), mpq_class(2 * gq));
      const double frank = std::pow(2.0, 1 - 2 * g) * std::tgamma(1 - g) / std::tgamma(g);
      EXPECT_NEAR(t.varsigma[0].value(), frank, 1e-13 * frank) << gs;
      EXPECT_EQ(t.varsigma[0], frank_constant(gq)) << gs;
    }
  }
}

TEST(Constants, ClosedFormsAgreeWithProducts) {
  for (const char* gs : {"1/3", "1/2", "4/3", "3/2", "5/2", "7/3", "11/4"}) {
    for (int n : {1, 2}) {
      const ConstantsTable t = build_table(parse_rational(gs), n);
      const RationalGamma& g = t.g;
      for (int j = 0; j <= g.half_floor(); ++j) {
        const double a = b_lower_closed(g, j).value(), b = b_lower_product(g, j).get_d();
        EXPECT_NEAR(a, b, 1e-12 * std::fabs(b)) << gs << " j=" << j;
      }
      for (int j = 0; j <= g.floor - g.half_floor() - 1; ++j) {
        const double a = b_frac_closed(g, j).value(), b = b_frac_product(g, j).get_d();
        EXPECT_NEAR(a, b, 1e-12 * std::fabs(b)) << gs << " j=" << j;
      }
      for (const auto& [j, v] : t.b_upper) {
        const double b = b_upper_product(g, j).get_d();
        EXPECT_NEAR(v.value(), b, 1e-12 * std::fabs(b)) << gs << " j=" << j;
      }
      for (std::size_t j = 0; j < t.b_mirror.size(); ++j) {
        const double b = b_mirror_product(g, static_cast<int>(j)).get_d();
        EXPECT_NEAR(t.b_mirror[j].value(), b, 1e-12 * std::fabs(b)) << gs << " j=" << j;
      }
    }
  }
}

TEST(Constants, Relations) {
  for (const char* gs : {"1/2", "5/2", "1/3", "4/3", "7/3", "11/4"}) {
    const ConstantsTable t = build_table(parse_rational(gs), 1);
    const RelationReport rep = relation_check(t);
    EXPECT_TRUE(rep.ok()) << gs;
    EXPECT_FALSE(rep.checks.empty());
    for (const auto& v : t.varsigma) EXPECT_GT(v.value(), 0.0) << gs;
    ASSERT_EQ(static_cast<int>(t.sigma.size()), t.g.floor + 1);
  }
}

TEST(Constants, SigmaBranches) {
  // σ_j = 2(γ-2j) b_{2γ-2j} below ⌊γ/2⌋, 2(2j-γ) b_{2j} above; checked numerically.
  const ConstantsTable t = build_table(parse_rational("5/2"), 1);
  const double g = 2.5;
  for (int j = 0; j <= t.g.half_floor(); ++j)
    EXPECT_NEAR(t.sigma[j].value(), 2 * (g - 2 * j) * t.b_mirror[j].value(),
                1e-12 * std::fabs(t.sigma[j].value()));
  for (const auto& [j, b] : t.b_upper)
    EXPECT_NEAR(t.sigma[j].value(), 2 * (2 * j - g) * b.value(), 1e-12 * std::fabs(t.sigma[j].value()));
}

TEST(Constants, RejectsIntegerGamma) {
  EXPECT_THROW(build_table(mpq_class(2), 1), DomainError);
  EXPECT_THROW(build_table(mpq_class(-1, 2), 1), DomainError);
}

}  // namespace
}  // namespace crtrace
