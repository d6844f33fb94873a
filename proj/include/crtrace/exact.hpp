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

#include <optional>
#include <string>

namespace crtrace {

// Parses "p/q", "p" or a terminating decimal such as "0.3" into an exact
// rational. Throws DomainError on malformed input.
mpq_class parse_rational(const std::string& text);

std::string to_string(const mpq_class& q);

// ⌊q⌋ for exact rationals.
long floor_of(const mpq_class& q);

// Closest p/q with q <= max_den to x, if it is within tol.
std::optional<mpq_class> rationalize(double x, long max_den = 1000, double tol = 1e-12);

// c^e for rational c > 0 and rational e, when the result is rational.
// Returns false (leaving out untouched) if c^e is irrational.
bool rational_power(const mpq_class& c, const mpq_class& e, mpq_class* out);

// Exact γ ∉ ℤ together with ⌊γ⌋, [γ], k = ⌊γ⌋+1, s = (n+1+γ)/2.
struct RationalGamma {
  mpq_class gamma;
  int floor = 0;
  mpq_class frac;
  int k = 1;
  int n = 1;
  mpq_class s;

  static RationalGamma make(const mpq_class& gamma, int n);

  int half_floor() const { return floor / 2; }  // ⌊γ/2⌋
  double as_double() const { return gamma.get_d(); }
};

}  // namespace crtrace
