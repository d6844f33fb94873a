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

#include "crtrace/radial.hpp"

#include <algorithm>
#include <cmath>

#include "crtrace/errors.hpp"

namespace crtrace {

namespace {

double binom(int n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

// Five-point stencils for f' and f'' at x, shifted inward near 0 and 1.
double fd(const std::function<double(double)>& g, double x, int order) {
  const double h = 1e-3;
  if (x - 2 * h >= 0.0 && x + 2 * h <= 1.0) {
    const double fm2 = g(x - 2 * h), fm1 = g(x - h), f0 = g(x), f1 = g(x + h), f2 = g(x + 2 * h);
    if (order == 1) return (fm2 - 8 * fm1 + 8 * f1 - f2) / (12 * h);
    return (-fm2 + 16 * fm1 - 30 * f0 + 16 * f1 - f2) / (12 * h * h);
  }
  const double s = (x - 2 * h < 0.0) ? h : -h;  // one-sided toward the interior
  double f[5];
  for (int i = 0; i < 5; ++i) f[i] = g(x + i * s);
  if (order == 1) return (-25 * f[0] + 48 * f[1] - 36 * f[2] + 16 * f[3] - 3 * f[4]) / (12 * s);
  return (35 * f[0] - 104 * f[1] + 114 * f[2] - 56 * f[3] + 11 * f[4]) / (12 * s * s);
}

}  // namespace

RadialProfile RadialProfile::from_function(std::function<double(double)> g) {
  RadialProfile p(
      [g](double phi, int order) {
        const double x = 1.0 - phi;
        if (order == 0) return g(x);
        if (order > 2) throw DomainError("RadialProfile: finite differences only up to order 2");
        return fd(g, x, order);
      },
      2);
  p.analytic_ = false;
  return p;
}

RadialProfile RadialProfile::constant(double c) {
  return RadialProfile([c](double, int order) { return order == 0 ? c : 0.0; }, 64);
}

RadialProfile RadialProfile::phi_power_poly(double e, std::vector<double> poly_x) {
  return RadialProfile(
      [e, poly_x](double phi, int order) {
        const double x = 1.0 - phi;
        double total = 0.0;
        for (int i = 0; i <= order; ++i) {
          // d^i/dx^i phi^e = (-1)^i e(e-1)...(e-i+1) phi^{e-i}
          double fall = 1.0;
          for (int l = 0; l < i; ++l) fall *= e - l;
          if (fall == 0.0) continue;
          const double dphi = ((i % 2) ? -fall : fall) * std::pow(phi, e - i);
          // (order-i)-th derivative of the polynomial
          const int m = order - i;
          double pv = 0.0;
          for (int d = static_cast<int>(poly_x.size()) - 1; d >= m; --d) {
            double c = poly_x[d];
            for (int l = 0; l < m; ++l) c *= d - l;
            pv = pv * x + c;
          }
          total += binom(order, i) * dphi * pv;
        }
        return total;
      },
      64);
}

double RadialProfile::at_phi(double phi, int order) const {
  if (!jet_) throw DomainError("RadialProfile: empty profile");
  if (order > max_order_) throw DomainError("RadialProfile: derivative order not available");
  return jet_(phi, order);
}

RadialProfile operator+(const RadialProfile& a, const RadialProfile& b) {
  RadialProfile p([a, b](double phi, int o) { return a.at_phi(phi, o) + b.at_phi(phi, o); },
                  std::min(a.max_order_, b.max_order_));
  p.analytic_ = a.analytic_ && b.analytic_;
  return p;
}

RadialProfile operator-(const RadialProfile& a, const RadialProfile& b) { return a + (-1.0) * b; }

RadialProfile operator*(double c, const RadialProfile& a) {
  RadialProfile p([c, a](double phi, int o) { return c * a.at_phi(phi, o); }, a.max_order_);
  p.analytic_ = a.analytic_;
  return p;
}

RadialProfile operator*(const RadialProfile& a, const RadialProfile& b) {
  RadialProfile p(
      [a, b](double phi, int o) {
        double s = 0.0;
        for (int i = 0; i <= o; ++i) s += binom(o, i) * a.at_phi(phi, i) * b.at_phi(phi, o - i);
        return s;
      },
      std::min(a.max_order_, b.max_order_));
  p.analytic_ = a.analytic_ && b.analytic_;
  return p;
}

}  // namespace crtrace
