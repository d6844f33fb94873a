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
#include <numbers>
#include <random>

#include "crtrace/geometry.hpp"
#include "crtrace/harmonics.hpp"

namespace crtrace {
namespace {

const cplx I(0.0, 1.0);

SiegelPoint random_interior(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.5, 1.5), uq(0.05, 2.0);
  std::vector<cplx> z(n);
  for (auto& c : z) c = cplx(u(rng), u(rng));
  return SiegelPoint::from_coords(z, u(rng), uq(rng));
}

TEST(Cayley, Examples) {
  for (int n : {1, 2, 3}) {
    SiegelPoint p = SiegelPoint::from_coords(std::vector<cplx>(n), 0.0, 1.0);
    const BallPoint w = cayley(p);
    for (const auto& c : w.w) EXPECT_NEAR(std::abs(c), 0.0, 1e-15);
    const BallPoint b = boundary_cayley(std::vector<cplx>(n), 0.0);
    EXPECT_NEAR(std::abs(b.w[n] - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(b.norm2(), 1.0, 1e-15);
  }
}

TEST(Cayley, InverseOfOrigin) {
  const SiegelPoint p = cayley_inverse(BallPoint{std::vector<cplx>(3)});
  EXPECT_NEAR(std::abs(p.zn1 - I), 0.0, 1e-15);
  for (const auto& c : p.z) EXPECT_NEAR(std::abs(c), 0.0, 1e-15);
}

TEST(Cayley, RoundTripAndDefiningFunction) {
  std::mt19937_64 rng(1);
  for (int n : {1, 2, 3})
    for (int i = 0; i < 100; ++i) {
      const SiegelPoint p = random_interior(n, rng);
      const BallPoint w = cayley(p);
      const SiegelPoint back = cayley_inverse(w);
      EXPECT_NEAR(std::abs(back.zn1 - p.zn1), 0.0, 1e-12 * std::max(1.0, std::abs(p.zn1)));
      for (int a = 0; a < n; ++a) EXPECT_NEAR(std::abs(back.z[a] - p.z[a]), 0.0, 1e-12);
      const double q = p.q();
      const double expect = 4.0 * q / std::norm(I + p.zn1);
      EXPECT_NEAR(w.phi(), expect, 1e-12 * expect);
      // Defining function through the Jacobian.
      EXPECT_NEAR(w.phi(), q * std::pow(4.0 * jacobian_interior(p), 1.0 / (n + 2)), 1e-12 * expect);
    }
}

TEST(Cayley, BoundaryRoundTrip) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n : {1, 2, 3})
    for (int i = 0; i < 50; ++i) {
      std::vector<cplx> z(n);
      for (auto& c : z) c = cplx(u(rng), u(rng));
      const double t = u(rng);
      const SiegelPoint p = heisenberg_boundary_point(z, t);
      EXPECT_NEAR(p.q(), 0.0, 1e-14);
      const BallPoint w = cayley(p);
      EXPECT_NEAR(w.norm2(), 1.0, 1e-12);
      const SiegelPoint back = cayley_inverse(w);
      EXPECT_NEAR(std::abs(back.zn1 - p.zn1), 0.0, 1e-10 * std::max(1.0, std::abs(p.zn1)));
      for (int a = 0; a < n; ++a) EXPECT_NEAR(std::abs(back.z[a] - p.z[a]), 0.0, 1e-10);
    }
}

TEST(Jacobian, InteriorExamples) {
  for (int n : {1, 2, 3}) {
    const SiegelPoint p = SiegelPoint::from_coords(std::vector<cplx>(n), 0.0, 0.0);
    EXPECT_NEAR(jacobian_interior(p), std::pow(4.0, n + 1), 1e-12);
  }
  std::mt19937_64 rng(3);
  for (int n : {1, 2, 3})
    for (int i = 0; i < 100; ++i) {
      const SiegelPoint p = random_interior(n, rng);
      const double phi = cayley(p).phi();
      const double expect = std::pow(phi, n + 2) / (4.0 * std::pow(p.q(), n + 2));
      EXPECT_NEAR(jacobian_interior(p), expect, 1e-12 * expect);
    }
}

TEST(Jacobian, BoundaryFormulaAndConsistency) {
  EXPECT_NEAR(jacobian_boundary({cplx(1.0, 0.0)}, 0.0), 0.5, 1e-15);
  for (int n : {1, 2, 3}) EXPECT_NEAR(jacobian_boundary(std::vector<cplx>(n), 0.0), std::pow(2.0, 2 * n + 1), 1e-12);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n : {1, 2, 3})
    for (int i = 0; i < 100; ++i) {
      std::vector<cplx> z(n);
      for (auto& c : z) c = cplx(u(rng), u(rng));
      const double t = u(rng);
      const double Jb = jacobian_boundary(z, t);
      const double Ji = jacobian_interior(SiegelPoint::from_coords(z, t, 0.0));
      const double lhs = 4.0 * Ji, rhs = std::pow(2.0 * Jb, (n + 2.0) / (n + 1.0));
      EXPECT_NEAR(lhs, rhs, 1e-12 * rhs);
    }
}

TEST(Jacobian, BoundaryIsSurfaceJacobianOfEmbedding) {
  // Finite-difference Gram determinant of (z, t) ↦ ∂C(z, t) in ℝ⁴.
  for (cplx z : {cplx(0.3, -0.4), cplx(-1.1, 0.2), cplx(0.0, 0.0)})
    for (double t : {0.7, -1.5, 0.0}) {
      const double fd = boundary_surface_jacobian_fd_n1(z, t);
      const double j = jacobian_boundary({z}, t);
      EXPECT_NEAR(fd, j, 1e-7 * j);
    }
}

TEST(BoundaryMeasure, HeisenbergPullbackMatchesSphereQuadrature) {
  // |J_∂C| dz dt pushes forward to the Euclidean surface measure of S³, so
  // the pullback integral equals |S³| times the normalized-measure average.
  const SphereQuadrature q = build_quadrature(1, 24, QuadKind::Deterministic);
  auto f = [](const SpherePoint& w) {
    return std::norm(w[0]) * std::norm(w[1]) + w[1].real() + 0.3 * std::pow(std::norm(w[0]), 3);
  };
  const double avg = inner_product([&](const SpherePoint& w) { return cplx(f(w)); },
                                   [](const SpherePoint&) { return cplx(1.0); }, q)
                         .real();
  const double pull = heisenberg_pullback_integral_n1([&](const BallPoint& b) { return f(b.w); });
  EXPECT_NEAR(pull, sphere_volume(1) * avg, 1e-9 * sphere_volume(1));
  const double mass = heisenberg_pullback_integral_n1([](const BallPoint&) { return 1.0; });
  EXPECT_NEAR(mass, 2.0 * std::numbers::pi * std::numbers::pi, 1e-9);
}

}  // namespace
}  // namespace crtrace
