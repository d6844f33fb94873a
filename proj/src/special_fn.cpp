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

#include "crtrace/special_fn.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "crtrace/errors.hpp"
#include "crtrace/quadrature.hpp"

namespace crtrace {

namespace {

constexpr double kPi = std::numbers::pi;

bool near_integer(double x, double* rounded) {
  double r = std::round(x);
  if (rounded) *rounded = r;
  return std::fabs(x - r) <= 1e-12 * std::max(1.0, std::fabs(x));
}

// Γ(a)/Γ(b) with both arguments at poles: the ratio of residues.
double pole_ratio(double a, double b) {
  long p = std::lround(-a), q = std::lround(-b);
  // (-1)^p/p! over (-1)^q/q!
  double v = ((p - q) % 2 == 0) ? 1.0 : -1.0;
  if (q >= p) {
    for (long i = p + 1; i <= q; ++i) v *= static_cast<double>(i);
  } else {
    for (long i = q + 1; i <= p; ++i) v /= static_cast<double>(i);
  }
  return v;
}

double series_sum(double a, double b, double c, double z) {
  long double sum = 1.0L, term = 1.0L;
  int quiet = 0;
  for (int k = 0; k < 100000; ++k) {
    term *= static_cast<long double>(a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (term == 0.0L) return static_cast<double>(sum);
    if (std::fabs(static_cast<double>(term)) <= 1e-17 * std::fabs(static_cast<double>(sum))) {
      if (++quiet >= 3) return static_cast<double>(sum);
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("hyp2f1: series did not converge within 1e5 terms");
}

bool terminates(double a) {
  double r;
  return near_integer(a, &r) && r <= 0.0;
}

// Γ(x1)Γ(x2)/(Γ(y1)Γ(y2)) with the reciprocal factors allowed to vanish.
double gamma_quotient(double x1, double x2, double y1, double y2) {
  if (is_nonpositive_integer(y1) || is_nonpositive_integer(y2)) return 0.0;
  LogGamma g1 = log_gamma(x1), g2 = log_gamma(x2), h1 = log_gamma(y1), h2 = log_gamma(y2);
  return g1.sign * g2.sign * h1.sign * h2.sign *
         std::exp(g1.value + g2.value - h1.value - h2.value);
}

}  // namespace

bool is_nonpositive_integer(double x) {
  double r;
  return x <= 0.5 && near_integer(x, &r) && r <= 0.0;
}

LogGamma log_gamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw DomainError("log_gamma: pole at x = " + std::to_string(x));
  }
  int sign = 1;
  double v = ::lgamma_r(x, &sign);
  return {v, sign};
}

double gamma_fn(double x) {
  if (is_nonpositive_integer(x)) throw DomainError("gamma: pole at x = " + std::to_string(x));
  return std::tgamma(x);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 0 && x < 170.0) return 1.0 / std::tgamma(x);
  LogGamma g = log_gamma(x);
  return g.sign * std::exp(-g.value);
}

double pochhammer(double a, int k) {
  double v = 1.0;
  for (int i = 0; i < k; ++i) v *= a + i;
  return v;
}

mpq_class pochhammer(const mpq_class& a, int k) {
  mpq_class v = 1;
  for (int i = 0; i < k; ++i) v *= a + i;
  return v;
}

double gamma_ratio(double a, double b) {
  const bool pa = is_nonpositive_integer(a), pb = is_nonpositive_integer(b);
  double m;
  if (near_integer(a - b, &m)) {
    if (pa && pb) return pole_ratio(a, b);
    if (pa) throw DomainError("gamma_ratio: numerator at a pole");
    if (m >= 0) return pochhammer(b, static_cast<int>(m));  // vanishes if b is a pole
    return 1.0 / pochhammer(a, static_cast<int>(-m));
  }
  if (pa && pb) throw DomainError("gamma_ratio: undefined ratio of poles");
  if (pa) throw DomainError("gamma_ratio: numerator at a pole");
  if (pb) return 0.0;
  LogGamma ga = log_gamma(a), gb = log_gamma(b);
  return ga.sign * gb.sign * std::exp(ga.value - gb.value);
}

double hyp2f1_series(double a, double b, double c, double z) {
  if (is_nonpositive_integer(c)) throw DomainError("hyp2f1: c is a non-positive integer");
  return series_sum(a, b, c, z);
}

double hyp2f1(const HypParams& p) {
  const double a = p.a, b = p.b, c = p.c, z = p.z;
  if (is_nonpositive_integer(c)) throw DomainError("hyp2f1: c is a non-positive integer");
  if (!(z >= 0.0 && z <= 1.0)) throw DomainError("hyp2f1: z outside [0,1]");
  if (z == 0.0) return 1.0;
  if (terminates(a) || terminates(b)) return series_sum(a, b, c, z);
  const double e = c - a - b;
  if (z == 1.0) {
    if (!(e > 0.0)) throw DomainError("hyp2f1: z = 1 requires c - a - b > 0");
    return gamma_quotient(c, e, c - a, c - b);
  }
  if (z <= 0.5) return series_sum(a, b, c, z);
  const bool e_integer_like = std::fabs(e - std::round(e)) < 0.05;
  if (z > 0.9 && !e_integer_like) return hyp2f1_complement(a, b, c, 1.0 - z);
  // Euler transform when the transformed series terminates or has smaller
  // coefficients.
  const double ea = c - a, eb = c - b;
  if (terminates(ea) || terminates(eb) || std::fabs(ea * eb) < std::fabs(a * b)) {
    return std::pow(1.0 - z, e) * series_sum(ea, eb, c, z);
  }
  return series_sum(a, b, c, z);
}

double hyp2f1_complement(double a, double b, double c, double w) {
  if (is_nonpositive_integer(c)) throw DomainError("hyp2f1: c is a non-positive integer");
  if (!(w >= 0.0 && w <= 1.0)) throw DomainError("hyp2f1_complement: w outside [0,1]");
  const double e = c - a - b;
  if (w < 0.1 && !(terminates(a) || terminates(b)) && std::fabs(e - std::round(e)) >= 0.05) {
    if (w == 0.0) {
      if (!(e > 0.0)) throw DomainError("hyp2f1: z = 1 requires c - a - b > 0");
      return gamma_quotient(c, e, c - a, c - b);
    }
    double t1 = 0.0, t2 = 0.0;
    const double A1 = gamma_quotient(c, e, c - a, c - b);
    if (A1 != 0.0) t1 = A1 * series_sum(a, b, 1.0 - e, w);
    const double A2 = gamma_quotient(c, -e, a, b);
    if (A2 != 0.0) t2 = A2 * std::pow(w, e) * series_sum(c - a, c - b, 1.0 + e, w);
    return t1 + t2;
  }
  return hyp2f1({a, b, c, 1.0 - w});
}

double hyp2f1_derivative(const HypParams& p, int order) {
  if (order < 0) throw DomainError("hyp2f1_derivative: negative order");
  if (order == 0) return hyp2f1(p);
  double coef = pochhammer(p.a, order) * pochhammer(p.b, order) / pochhammer(p.c, order);
  if (coef == 0.0) return 0.0;
  return coef * hyp2f1({p.a + order, p.b + order, p.c + order, p.z});
}

double jacobi_poly(int m, double alpha, double beta, double t) {
  if (m < 0) throw DomainError("jacobi_poly: negative degree");
  if (m == 0) return 1.0;
  double p0 = 1.0;
  double p1 = (alpha + 1.0) + (alpha + beta + 2.0) * (t - 1.0) / 2.0;
  for (int k = 2; k <= m; ++k) {
    const double s = 2.0 * k + alpha + beta;
    const double a1 = 2.0 * k * (k + alpha + beta) * (s - 2.0);
    const double a2 = (s - 1.0) * (s * (s - 2.0) * t + alpha * alpha - beta * beta);
    const double a3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s;
    const double p2 = (a2 * p1 - a3 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double jacobi_poly_derivative(int m, double alpha, double beta, double t) {
  if (m == 0) return 0.0;
  return 0.5 * (m + alpha + beta + 1.0) * jacobi_poly(m - 1, alpha + 1.0, beta + 1.0, t);
}

IdentityPair cosine_integral_pair(double r, double s, int d) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("cosine_integral_pair: r must lie in [0,1)");
  constexpr int N = 2048;
  long double re = 0.0L, im = 0.0L;
  for (int i = 0; i < N; ++i) {
    const double th = -kPi + 2.0 * kPi * i / N;
    const double base = std::pow(1.0 - 2.0 * r * std::cos(th) + r * r, -s);
    re += base * std::cos(d * th);
    im += base * std::sin(d * th);
  }
  const double h = 2.0 * kPi / N;
  const double lhs = static_cast<double>(re) * h;
  if (std::fabs(static_cast<double>(im) * h) > 1e-9 * (1.0 + std::fabs(lhs))) {
    throw ConvergenceError("cosine_integral_pair: imaginary part did not vanish");
  }
  const int ad = std::abs(d);
  double term = 2.0 * kPi * std::pow(r, ad) * gamma_ratio(s + ad, s) * rgamma(ad + 1.0);
  long double sum = term;
  for (int mu = 0; mu < 100000 && term != 0.0; ++mu) {
    term *= r * r * (s + mu) * (s + ad + mu) / ((mu + 1.0) * (ad + mu + 1.0));
    sum += term;
    if (std::fabs(term) <= 1e-18 * std::fabs(static_cast<double>(sum))) break;
  }
  return {lhs, static_cast<double>(sum)};
}

IdentityPair jacobi_integral_pair(int n, int d, int mu, int m) {
  if (n < 1 || d < 0 || mu < 0 || m < 0) throw DomainError("jacobi_integral_pair: bad indices");
  const int degree = (n - 1) + d + mu + m;
  const Rule gl = gauss_legendre(degree / 2 + 2);
  long double lhs = 0.0L;
  for (std::size_t i = 0; i < gl.size(); ++i) {
    const double t = gl.x[i];
    lhs += gl.w[i] * std::pow(1.0 - t, n - 1) * std::pow(1.0 + t, d + mu) *
           jacobi_poly(m, n - 1.0, d, t);
  }
  double rhs = 0.0;
  if (mu >= m) {
    auto lf = [](int k) { return std::lgamma(k + 1.0); };
    rhs = std::exp((d + n + mu) * std::log(2.0) + lf(mu) - lf(m) - lf(mu - m) + lf(d + mu) +
                   lf(m + n - 1) - lf(d + m + n + mu));
  }
  return {static_cast<double>(lhs), rhs};
}

}  // namespace crtrace
