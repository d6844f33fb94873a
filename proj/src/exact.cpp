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

#include "crtrace/exact.hpp"

#include <gmp.h>

#include <algorithm>
#include <cctype>
#include <cmath>

#include "crtrace/errors.hpp"

namespace crtrace {

mpq_class parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty rational");
  auto bad = [&] { return DomainError("malformed rational: " + text); };

  auto parse_int = [&](const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw bad();
    for (std::size_t j = i; j < t.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(t[j]))) throw bad();
    return mpz_class(t[0] == '+' ? t.substr(1) : t);
  };

  mpq_class q;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class num = parse_int(s.substr(0, slash));
    mpz_class den = parse_int(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator: " + text);
    q = mpq_class(num, den);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
    if (ip.empty()) ip = "0";
    if (fp.empty()) fp = "0";
    if (fp[0] == '-' || fp[0] == '+') throw bad();
    mpz_class whole = parse_int(ip), part = parse_int(fp);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    q = mpq_class(whole * scale + part, scale);
    if (neg) q = -q;
  } else {
    q = mpq_class(parse_int(s));
  }
  q.canonicalize();
  return q;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

long floor_of(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

std::optional<mpq_class> rationalize(double x, long max_den, double tol) {
  for (long q = 1; q <= max_den; ++q) {
    double p = std::round(x * q);
    if (std::fabs(p / q - x) <= tol * std::max(1.0, std::fabs(x))) {
      mpq_class r(static_cast<long>(p), q);
      r.canonicalize();
      return r;
    }
  }
  return std::nullopt;
}

namespace {

// Exact d-th root of z >= 0 if it exists.
bool exact_root(const mpz_class& z, unsigned long d, mpz_class* out) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), d) == 0) return false;
  *out = r;
  return true;
}

}  // namespace

bool rational_power(const mpq_class& c, const mpq_class& e, mpq_class* out) {
  if (c <= 0) throw DomainError("rational_power: base must be positive");
  const mpz_class& p = e.get_num();
  const mpz_class& d = e.get_den();
  if (!d.fits_ulong_p() || !p.fits_slong_p())
    throw DomainError("rational_power: exponent too large");
  mpz_class rn, rd;
  if (!exact_root(c.get_num(), d.get_ui(), &rn) ||
      !exact_root(c.get_den(), d.get_ui(), &rd))
    return false;
  long pe = p.get_si();
  unsigned long ae = static_cast<unsigned long>(pe < 0 ? -pe : pe);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), rn.get_mpz_t(), ae);
  mpz_pow_ui(den.get_mpz_t(), rd.get_mpz_t(), ae);
  mpq_class r = pe >= 0 ? mpq_class(num, den) : mpq_class(den, num);
  r.canonicalize();
  *out = r;
  return true;
}

RationalGamma RationalGamma::make(const mpq_class& gamma, int n) {
  if (gamma <= 0) throw DomainError("gamma must be positive");
  if (gamma.get_den() == 1) throw DomainError("gamma must not be an integer");
  if (n < 0) throw DomainError("n must be non-negative");
  RationalGamma g;
  g.gamma = gamma;
  g.floor = static_cast<int>(floor_of(gamma));
  g.frac = gamma - g.floor;
  g.k = g.floor + 1;
  g.n = n;
  g.s = (mpq_class(n + 1) + gamma) / 2;
  return g;
}

}  // namespace crtrace
