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

struct Rule {
  std::vector<double> x;
  std::vector<double> w;

  std::size_t size() const { return x.size(); }
  double integrate(const std::function<double(double)>& f) const;
};

// Gauss–Jacobi rule for ∫_{-1}^{1} (1-x)^alpha (1+x)^beta f(x) dx.
// Golub–Welsch start, Newton-polished nodes, closed-form weights.
Rule gauss_jacobi(int n, double alpha, double beta);
Rule gauss_legendre(int n);

// Affine image of a rule on [-1,1] onto [a,b] (weights scaled, weight
// function not transformed).
Rule map_rule(const Rule& r, double a, double b);

// Composite Gauss–Legendre on a geometric mesh accumulating at one end of
// [a,b]; breakpoints at distance (b-a)*ratio^l from that end.
Rule graded_rule(double a, double b, bool toward_b, int layers, double ratio, int nodes_per_panel);

}  // namespace crtrace
