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

#include <functional>
#include <vector>

namespace crtrace {

// A function g of x = r^2 on [0,1]. The primary evaluator works in the
// boundary variable phi = 1 - x so that points close to the sphere are
// resolved without rounding x to 1; derivatives are always taken in x.
class RadialProfile {
 public:
  // d^order g/dx^order evaluated at x = 1 - phi.
  using Jet = std::function<double(double phi, int order)>;

  RadialProfile() = default;
  RadialProfile(Jet jet, int max_order) : jet_(std::move(jet)), max_order_(max_order) {}

  // Plain function of x; derivatives by 5-point finite differences (order <= 2).
  static RadialProfile from_function(std::function<double(double)> g);
  static RadialProfile constant(double c);
  // phi^e * p(x) with p given by coefficients in powers of x.
  static RadialProfile phi_power_poly(double e, std::vector<double> poly_x);

  double operator()(double x) const { return at_phi(1.0 - x, 0); }
  double at_phi(double phi, int order = 0) const;
  double derivative(double x, int order) const { return at_phi(1.0 - x, order); }
  int max_order() const { return max_order_; }
  bool analytic() const { return analytic_; }

  friend RadialProfile operator+(const RadialProfile& a, const RadialProfile& b);
  friend RadialProfile operator-(const RadialProfile& a, const RadialProfile& b);
  friend RadialProfile operator*(double c, const RadialProfile& a);
  // Pointwise product (Leibniz rule on jets).
  friend RadialProfile operator*(const RadialProfile& a, const RadialProfile& b);

 private:
  Jet jet_;
  int max_order_ = 0;
  bool analytic_ = true;
};

}  // namespace crtrace
