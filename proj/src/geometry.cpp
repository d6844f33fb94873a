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

#include "crtrace/geometry.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "crtrace/errors.hpp"
#include "crtrace/quadrature.hpp"

namespace crtrace {

namespace {
const cplx I(0.0, 1.0);
}

double SiegelPoint::zsq() const {
  double s = 0.0;
  for (const auto& v : z) s += std::norm(v);
  return s;
}

double SiegelPoint::q() const { return zn1.imag() - zsq(); }

double SiegelPoint::rho() const { return std::sqrt(2.0 * std::max(0.0, q())); }

SiegelPoint SiegelPoint::from_coords(const std::vector<cplx>& z, double t, double q) {
  SiegelPoint p{z, cplx(t, 0.0)};
  p.zn1 = cplx(t, q + p.zsq());
  return p;
}

double BallPoint::norm2() const {
  double s = 0.0;
  for (const auto& v : w) s += std::norm(v);
  return s;
}

BallPoint cayley(const SiegelPoint& p) {
  if (p.q() < -1e-12) throw DomainError("cayley: point outside the Siegel domain");
  const cplx den = I + p.zn1;
  if (std::abs(den) == 0.0) throw DomainError("cayley: singular at z_{n+1} = -i");
  BallPoint b;
  b.w.reserve(p.z.size() + 1);
  for (const auto& zj : p.z) b.w.push_back(2.0 * I * zj / den);
  b.w.push_back((I - p.zn1) / den);
  return b;
}

SiegelPoint cayley_inverse(const BallPoint& b) {
  if (b.w.empty()) throw DomainError("cayley_inverse: empty point");
  const cplx last = b.w.back();
  const cplx den = 1.0 + last;
  if (std::abs(den) == 0.0) throw DomainError("cayley_inverse: singular at w_{n+1} = -1");
  SiegelPoint p;
  for (std::size_t j = 0; j + 1 < b.w.size(); ++j) p.z.push_back(b.w[j] / den);
  p.zn1 = I * (1.0 - last) / den;
  return p;
}

double jacobian_interior(const SiegelPoint& p) {
  const int n = p.n();
  const double t = p.t();
  const double a = 1.0 + p.q() + p.zsq();
  return std::pow(4.0, n + 1) / std::pow(t * t + a * a, n + 2);
}

double jacobian_boundary(const std::vector<cplx>& z, double t) {
  const int n = static_cast<int>(z.size());
  double zs = 0.0;
  for (const auto& v : z) zs += std::norm(v);
  const double a = 1.0 + zs;
  return std::pow(2.0, 2 * n + 1) / std::pow(t * t + a * a, n + 1);
}

SiegelPoint heisenberg_boundary_point(const std::vector<cplx>& z, double t) {
  SiegelPoint p{z, cplx(t, 0.0)};
  p.zn1 = cplx(t, p.zsq());
  return p;
}

BallPoint boundary_cayley(const std::vector<cplx>& z, double t) {
  return cayley(heisenberg_boundary_point(z, t));
}

double heisenberg_pullback_integral_n1(const std::function<double(const BallPoint&)>& f,
                                       int nodes) {
  const double pi = std::numbers::pi;
  const Rule rchi = map_rule(gauss_legendre(nodes), 0.0, pi / 2);
  const Rule rpsi = map_rule(gauss_legendre(nodes), -pi / 2, pi / 2);
  const int nang = 2 * nodes;
  long double total = 0.0L;
  for (std::size_t a = 0; a < rchi.size(); ++a) {
    const double chi = rchi.x[a];
    const double r = std::tan(chi);
    const double dr = 1.0 / (std::cos(chi) * std::cos(chi));
    const double s = 1.0 + r * r;
    for (std::size_t b = 0; b < rpsi.size(); ++b) {
      const double psi = rpsi.x[b];
      const double t = s * std::tan(psi);
      const double dt = s / (std::cos(psi) * std::cos(psi));
      const double jac = jacobian_boundary({cplx(r, 0.0)}, t);
      long double ring = 0.0L;
      for (int k = 0; k < nang; ++k) {
        const double ang = 2.0 * pi * k / nang;
        ring += f(boundary_cayley({std::polar(r, ang)}, t));
      }
      // dz = r dr dang
      total += rchi.w[a] * rpsi.w[b] * dr * dt * r * jac * (2.0 * pi / nang) * ring;
    }
  }
  return static_cast<double>(total);
}

double boundary_surface_jacobian_fd_n1(cplx z, double t, double h) {
  auto emb = [](double x, double y, double tt) {
    BallPoint b = boundary_cayley({cplx(x, y)}, tt);
    Eigen::Vector4d v(b.w[0].real(), b.w[0].imag(), b.w[1].real(), b.w[1].imag());
    return v;
  };
  const double x = z.real(), y = z.imag();
  Eigen::Matrix<double, 4, 3> D;
  D.col(0) = (emb(x + h, y, t) - emb(x - h, y, t)) / (2 * h);
  D.col(1) = (emb(x, y + h, t) - emb(x, y - h, t)) / (2 * h);
  D.col(2) = (emb(x, y, t + h) - emb(x, y, t - h)) / (2 * h);
  return std::sqrt((D.transpose() * D).determinant());
}

}  // namespace crtrace
