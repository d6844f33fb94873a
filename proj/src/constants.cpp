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

#include "crtrace/constants.hpp"

#include <cmath>
#include <sstream>

#include "crtrace/errors.hpp"

namespace crtrace {

namespace {

bool is_nonpositive_int(const mpq_class& x) { return x.get_den() == 1 && x <= 0; }

mpq_class factorial(long m) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
  return mpq_class(f);
}

mpq_class sq(const mpq_class& x) { return x * x; }

}  // namespace

void GammaMonomial::normalize() {
  if (coeff_ == 0) {
    pow2_ = 0;
    gammas_.clear();
    return;
  }
  long f = floor_of(pow2_);
  if (f != 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(f < 0 ? -f : f));
    if (f > 0) coeff_ *= p; else coeff_ /= p;
    pow2_ -= f;
  }
  for (auto it = gammas_.begin(); it != gammas_.end();)
    it = it->second == 0 ? gammas_.erase(it) : std::next(it);
}

GammaMonomial GammaMonomial::rational(const mpq_class& q) {
  GammaMonomial m;
  m.coeff_ = q;
  m.normalize();
  return m;
}

GammaMonomial GammaMonomial::power_of_two(const mpq_class& e) {
  GammaMonomial m;
  m.coeff_ = 1;
  m.pow2_ = e;
  m.normalize();
  return m;
}

GammaMonomial GammaMonomial::gamma(const mpq_class& x) {
  if (is_nonpositive_int(x)) throw DomainError("Gamma pole at " + to_string(x));
  GammaMonomial m;
  long fl = floor_of(x);
  if (x.get_den() == 1) {
    m.coeff_ = factorial(fl - 1);
    return m;
  }
  mpq_class r = x - fl;
  m.coeff_ = 1;
  m.gammas_[r] = 1;
  if (fl >= 0) {
    for (long i = 0; i < fl; ++i) m.coeff_ *= r + i;
  } else {
    for (long i = 1; i <= -fl; ++i) m.coeff_ /= r - i;
  }
  return m;
}

GammaMonomial GammaMonomial::ratio(const std::vector<mpq_class>& num,
                                   const std::vector<mpq_class>& den) {
  int np = 0, dp = 0;
  for (const auto& x : num) np += is_nonpositive_int(x);
  for (const auto& x : den) dp += is_nonpositive_int(x);
  if (np > dp) throw DomainError("Gamma ratio diverges");
  if (np < dp) return rational(0);
  // Equal pole counts: Γ(-m+ε) ~ (-1)^m/(m! ε), the ε's cancel.
  auto factor = [](const mpq_class& x) {
    if (!is_nonpositive_int(x)) return gamma(x);
    long m = -x.get_num().get_si();
    mpq_class res = factorial(m);
    return rational((m % 2 ? -1 : 1) / res);
  };
  GammaMonomial out = rational(1);
  for (const auto& x : num) out = out * factor(x);
  for (const auto& x : den) out = out / factor(x);
  return out;
}

double GammaMonomial::value() const {
  double v = coeff_.get_d() * std::exp2(pow2_.get_d());
  for (const auto& [r, e] : gammas_) v *= std::pow(std::tgamma(r.get_d()), e);
  return v;
}

std::string GammaMonomial::str() const {
  std::ostringstream os;
  os << coeff_.get_str();
  if (is_zero()) return os.str();
  if (pow2_ != 0) os << " * 2^(" << pow2_.get_str() << ")";
  for (const auto& [r, e] : gammas_) {
    os << " * Gamma(" << r.get_str() << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

GammaMonomial GammaMonomial::operator-() const {
  GammaMonomial m = *this;
  m.coeff_ = -m.coeff_;
  return m;
}

GammaMonomial operator*(const GammaMonomial& a, const GammaMonomial& b) {
  GammaMonomial m;
  m.coeff_ = a.coeff_ * b.coeff_;
  m.pow2_ = a.pow2_ + b.pow2_;
  m.gammas_ = a.gammas_;
  for (const auto& [r, e] : b.gammas_) m.gammas_[r] += e;
  m.normalize();
  return m;
}

GammaMonomial operator/(const GammaMonomial& a, const GammaMonomial& b) {
  if (b.is_zero()) throw DomainError("division by zero monomial");
  GammaMonomial m;
  m.coeff_ = a.coeff_ / b.coeff_;
  m.pow2_ = a.pow2_ - b.pow2_;
  m.gammas_ = a.gammas_;
  for (const auto& [r, e] : b.gammas_) m.gammas_[r] -= e;
  m.normalize();
  return m;
}

bool operator==(const GammaMonomial& a, const GammaMonomial& b) {
  return a.coeff_ == b.coeff_ && a.pow2_ == b.pow2_ && a.gammas_ == b.gammas_;
}

GammaMonomial c_gamma_exact(const mpq_class& x) {
  return GammaMonomial::power_of_two(x) * GammaMonomial::ratio({x}, {-x});
}

namespace {

void check_range(bool ok, const char* what, int j) {
  if (!ok) throw DomainError(std::string(what) + ": index out of range: " + std::to_string(j));
}

GammaMonomial pow4(long e) { return GammaMonomial::power_of_two(mpq_class(2 * e)); }

// j!(⌊γ⌋-j)! Γ(γ+1-j) Γ(j+1-[γ]) / (Γ(a) Γ(b)), shared by the upper b, σ, ς.
GammaMonomial upper_family(const RationalGamma& g, int j, const mpq_class& a,
                           const mpq_class& b) {
  const mpq_class& G = g.gamma;
  return GammaMonomial::rational(factorial(j) * factorial(g.floor - j)) *
         GammaMonomial::ratio({G + 1 - j, j + 1 - g.frac}, {a, b});
}

}  // namespace

GammaMonomial b_lower_closed(const RationalGamma& g, int j) {
  check_range(j >= 0 && j <= g.floor, "b_lower", j);
  const mpq_class& G = g.gamma;
  mpq_class F = g.floor;
  return pow4(2 * j) * GammaMonomial::rational(factorial(j)) *
         GammaMonomial::ratio({G + 1 - j, F + 1 - j, j + 1 - g.frac},
                              {G + 1 - 2 * j, F + 1 - 2 * j, 1 - g.frac});
}

mpq_class b_lower_product(const RationalGamma& g, int j) {
  check_range(j >= 0 && j <= g.floor, "b_lower", j);
  const mpq_class& G = g.gamma;
  mpq_class a = sq(G - 2 * j), p = 1;
  for (int l = 0; l < j; ++l)
    p *= (a - sq(G - 2 * l)) * (a - sq(G + 2 * l - 2 * g.floor));
  return p;
}

GammaMonomial b_frac_closed(const RationalGamma& g, int j) {
  check_range(j >= 0 && j <= g.floor, "b_frac", j);
  mpq_class F = g.floor;
  const mpq_class& f = g.frac;
  return -(pow4(2 * j + 1) * GammaMonomial::rational(factorial(j)) *
           GammaMonomial::ratio({j + 1 + f, F + 1 - j, F + 1 - j - f},
                                {f, F - 2 * j, F + 1 - 2 * j - f}));
}

mpq_class b_frac_product(const RationalGamma& g, int j) {
  check_range(j >= 0 && j <= g.floor, "b_frac", j);
  const mpq_class& G = g.gamma;
  mpq_class a = sq(g.floor - g.frac - 2 * j), p = 1;
  for (int l = 0; l <= j; ++l) p *= a - sq(G - 2 * l);
  for (int l = 0; l < j; ++l) p *= a - sq(g.frac - g.floor + 2 * l);
  return p;
}

GammaMonomial b_upper_closed(const RationalGamma& g, int j) {
  check_range(j > g.half_floor() && j <= g.floor, "b_upper", j);
  const mpq_class& G = g.gamma;
  return pow4(g.floor) * upper_family(g, j, G + 1 - 2 * j, 2 * j + 1 - G);
}

namespace {

// (-1)^{⌊γ⌋} Π_{i ∈ {0..⌊γ⌋} \ {skip}} (x² - (γ-2i)²)
mpq_class skip_product(const RationalGamma& g, const mpq_class& x, int skip) {
  mpq_class p = (g.floor % 2) ? -1 : 1;
  for (int i = 0; i <= g.floor; ++i)
    if (i != skip) p *= sq(x) - sq(g.gamma - 2 * i);
  return p;
}

}  // namespace

mpq_class b_upper_product(const RationalGamma& g, int j) {
  check_range(j > g.half_floor() && j <= g.floor, "b_upper", j);
  return skip_product(g, g.gamma - 2 * j, j);
}

mpq_class b_upper_frac_product(const RationalGamma& g, int j) {
  check_range(j >= g.floor - g.half_floor() && j <= g.floor, "b_upper_frac", j);
  return skip_product(g, g.gamma - 2 * j - 2 * g.frac, g.floor - j);
}

GammaMonomial b_mirror_closed(const RationalGamma& g, int j) {
  check_range(j >= 0 && j <= g.half_floor(), "b_mirror", j);
  const mpq_class& G = g.gamma;
  return pow4(g.floor) * upper_family(g, j, G + 1 - 2 * j, 2 * j + 1 - G);
}

mpq_class b_mirror_product(const RationalGamma& g, int j) {
  check_range(j >= 0 && j <= g.half_floor(), "b_mirror", j);
  return skip_product(g, g.gamma - 2 * j, j);
}

GammaMonomial sigma_closed(const RationalGamma& g, int j) {
  check_range(j >= 0 && j <= g.floor, "sigma", j);
  const mpq_class& G = g.gamma;
  GammaMonomial v = GammaMonomial::power_of_two(2 * g.floor + 1) *
                    upper_family(g, j, G - 2 * j, 2 * j + 1 - G);
  return j <= g.half_floor() ? v : -v;
}

GammaMonomial varsigma_closed(const RationalGamma& g, int j) {
  check_range(j >= 0 && j <= g.floor, "varsigma", j);
  const mpq_class& G = g.gamma;
  if (j <= g.half_floor())
    return GammaMonomial::power_of_two(4 * j - 2 * g.frac + 1) *
           upper_family(g, j, G + 1 - 2 * j, G - 2 * j);
  return GammaMonomial::power_of_two(4 * G - 4 * j - 2 * g.frac + 1) *
         upper_family(g, j, 2 * j + 1 - G, 2 * j - G);
}

GammaMonomial frank_constant(const mpq_class& gamma) {
  return GammaMonomial::power_of_two(1 - 2 * gamma) * GammaMonomial::rational(gamma) *
         GammaMonomial::ratio({1 - gamma}, {1 + gamma});
}

namespace {

// σ from the b-constants, ς from σ and c.
GammaMonomial sigma_from_b(const RationalGamma& g, int j, const GammaMonomial& b) {
  mpq_class d = g.gamma - 2 * j;
  return GammaMonomial::rational(j <= g.half_floor() ? 2 * d : -2 * d) * b;
}

GammaMonomial varsigma_from_sigma(const RationalGamma& g, int j, const GammaMonomial& sigma) {
  mpq_class d = g.gamma - 2 * j;
  if (j <= g.half_floor())
    return -(GammaMonomial::power_of_two(-d) / c_gamma_exact(d) * sigma);
  return -(GammaMonomial::power_of_two(d) / c_gamma_exact(-d) * sigma);
}

void require_equal(const GammaMonomial& closed, const GammaMonomial& product,
                   const std::string& what) {
  if (!(closed == product))
    throw MismatchError(what + ": closed form " + closed.str() + " != product " +
                        product.str());
}

}  // namespace

ConstantsTable build_table(const mpq_class& gamma, int n) {
  ConstantsTable t;
  t.g = RationalGamma::make(gamma, n);
  const RationalGamma& g = t.g;
  auto R = [](const mpq_class& q) { return GammaMonomial::rational(q); };
  auto tag = [](const char* name, int j) { return std::string(name) + "[" + std::to_string(j) + "]"; };

  for (int j = 0; j <= g.floor; ++j) {
    GammaMonomial c = b_lower_closed(g, j);
    require_equal(c, R(b_lower_product(g, j)), tag("b_lower", j));
    t.b_lower.push_back(c);
    c = b_frac_closed(g, j);
    require_equal(c, R(b_frac_product(g, j)), tag("b_frac", j));
    t.b_frac.push_back(c);
  }
  for (int j = g.half_floor() + 1; j <= g.floor; ++j) {
    GammaMonomial c = b_upper_closed(g, j);
    require_equal(c, R(b_upper_product(g, j)), tag("b_upper", j));
    t.b_upper[j] = c;
  }
  for (int j = g.floor - g.half_floor(); j <= g.floor; ++j)
    t.b_upper_frac[j] = R(b_upper_frac_product(g, j));
  for (int j = 0; j <= g.half_floor(); ++j) {
    GammaMonomial c = b_mirror_closed(g, j);
    require_equal(c, R(b_mirror_product(g, j)), tag("b_mirror", j));
    t.b_mirror.push_back(c);
  }
  for (int j = 0; j <= g.floor; ++j) {
    GammaMonomial b = R(j <= g.half_floor() ? b_mirror_product(g, j) : b_upper_product(g, j));
    GammaMonomial s = sigma_closed(g, j);
    GammaMonomial s_prod = sigma_from_b(g, j, b);
    require_equal(s, s_prod, tag("sigma", j));
    t.sigma.push_back(s);
    GammaMonomial v = varsigma_closed(g, j);
    require_equal(v, varsigma_from_sigma(g, j, s_prod), tag("varsigma", j));
    t.varsigma.push_back(v);
  }
  return t;
}

bool RelationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

RelationReport relation_check(const ConstantsTable& t) {
  RelationReport rep;
  const RationalGamma& g = t.g;
  auto add = [&](std::string name, bool ok) { rep.checks.push_back({std::move(name), ok}); };
  auto idx = [](int j) { return "[" + std::to_string(j) + "]"; };

  add("b_lower[0] == 1", t.b_lower.at(0) == GammaMonomial::rational(1));
  for (int j = 0; j <= g.floor; ++j) {
    bool lower_zero = j > g.half_floor();
    add("b_lower" + idx(j) + (lower_zero ? " vanishes" : " nonzero"),
        t.b_lower[j].is_zero() == lower_zero);
    bool frac_zero = j >= g.floor - g.half_floor();
    add("b_frac" + idx(j) + (frac_zero ? " vanishes" : " nonzero"),
        t.b_frac[j].is_zero() == frac_zero);
  }
  for (int j = 0; j <= g.half_floor(); ++j)
    add("mirror b_2gamma-2j" + idx(j),
        t.b_mirror[j] == t.b_upper_frac.at(g.floor - j));
  for (int j = 0; j <= g.floor; ++j) {
    GammaMonomial b = j <= g.half_floor() ? b_mirror_closed(g, j) : b_upper_closed(g, j);
    add("sigma" + idx(j) + " vs b", t.sigma[j] == sigma_from_b(g, j, b));
    add("varsigma" + idx(j) + " vs sigma", t.varsigma[j] == varsigma_from_sigma(g, j, t.sigma[j]));
    add("varsigma" + idx(j) + " > 0", t.varsigma[j].sign() > 0);
  }
  if (g.floor == 0) {
    add("sigma[0] == 2 gamma", t.sigma[0] == GammaMonomial::rational(2 * g.gamma));
    add("varsigma[0] == sharp constant", t.varsigma[0] == frank_constant(g.gamma));
  }
  return rep;
}

}  // namespace crtrace
