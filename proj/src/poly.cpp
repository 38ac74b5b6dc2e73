/*
   Copyright 2026 The smith-whittaker Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "smith/poly.hpp"

#include <algorithm>

namespace smith {

std::string ratToString(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parseRational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    return makeRational(num, den);
  } catch (const std::exception&) {
    throw DomainError("malformed rational literal: '" + text + "'");
  }
}

Poly Poly::monomial(const Rational& c, int k) {
  if (k < 0) throw DomainError("negative exponent in polynomial monomial");
  std::vector<Rational> cs(static_cast<std::size_t>(k) + 1, Rational(0));
  cs.back() = c;
  return Poly(std::move(cs));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return Poly(std::move(out));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()),
                            Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return Poly();
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return Poly(std::move(out));
}

Poly Poly::operator*(const Rational& s) const {
  if (s == 0) return Poly();
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * s;
  return Poly(std::move(out));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(out));
}

Poly Poly::pow(int n) const {
  if (n < 0) throw DomainError("negative polynomial power");
  Poly acc = Poly::one();
  Poly base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Poly Poly::monic() const {
  if (isZero()) throw DomainError("monic() of the zero polynomial");
  return *this * (Rational(1) / leadingCoeff());
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.isZero()) throw DomainError("polynomial division by zero");
  Poly r = a;
  std::vector<Rational> q;
  const int db = *b.degree();
  const Rational lb = b.leadingCoeff();
  while (!r.isZero() && *r.degree() >= db) {
    const int k = *r.degree() - db;
    const Rational c = r.leadingCoeff() / lb;
    if (static_cast<int>(q.size()) < k + 1) q.resize(k + 1, Rational(0));
    q[static_cast<std::size_t>(k)] += c;
    r = r - Poly::monomial(c, k) * b;
  }
  return {Poly(std::move(q)), r};
}

bool divides(const Poly& b, const Poly& a) {
  if (b.isZero()) return a.isZero();
  return divmod(a, b).second.isZero();
}

Poly polyShift(const Poly& p, const Rational& k) {
  // Horner in the shifted variable: p(x+k) built from the top coefficient down.
  Poly acc;
  const Poly xk = Poly::variable() + Poly::constant(k);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * xk + Poly::constant(*it);
  return acc;
}

Poly discreteAntiderivative(const Poly& f) {
  if (f.isZero()) return Poly();
  const int d = *f.degree();
  // u = sum_{k=1}^{d+1} u_k x^k. The forward difference of x^k contributes
  // binomial(k, i) to the coefficient of x^i for every i < k, so the system
  // is triangular from the top coefficient down.
  std::vector<std::vector<Rational>> binom(
      static_cast<std::size_t>(d) + 2,
      std::vector<Rational>(static_cast<std::size_t>(d) + 2, Rational(0)));
  for (int nn = 0; nn <= d + 1; ++nn) {
    binom[nn][0] = 1;
    for (int kk = 1; kk <= nn; ++kk)
      binom[nn][kk] = binom[nn - 1][kk - 1] + binom[nn - 1][kk];
  }
  std::vector<Rational> u(static_cast<std::size_t>(d) + 2, Rational(0));
  for (int i = d; i >= 0; --i) {
    Rational rhs = Rational(2) * f.coeff(i);
    for (int k = i + 2; k <= d + 1; ++k) rhs -= u[k] * binom[k][i];
    u[static_cast<std::size_t>(i) + 1] = rhs / binom[i + 1][i];
  }
  return Poly(std::move(u));  // u_0 = 0 by construction
}

Poly polyGcd(const Poly& a, const Poly& b) {
  if (a.isZero() && b.isZero())
    throw DomainError("gcd of two zero polynomials");
  Poly r0 = a, r1 = b;
  while (!r1.isZero()) {
    Poly r2 = divmod(r0, r1).second;
    r0 = r1;
    r1 = r2;
  }
  return r0.monic();
}

ExtendedGcd extendedGcd(const Poly& a, const Poly& b) {
  if (a.isZero() && b.isZero())
    throw DomainError("extended gcd of two zero polynomials");
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(), s1 = Poly::zero();
  Poly t0 = Poly::zero(), t1 = Poly::one();
  while (!r1.isZero()) {
    auto [q, r2] = divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  const Rational inv = Rational(1) / r0.leadingCoeff();
  return ExtendedGcd{r0 * inv, s0 * inv, t0 * inv};
}

Poly FactoredPoly::product() const {
  Poly acc = Poly::constant(unit);
  for (const auto& f : factors) acc = acc * f.factor.pow(f.multiplicity);
  return acc;
}

namespace {

// All positive divisors of |n|, by trial division. Intended for the small
// constants that arise at desk scale.
std::vector<Integer> positiveDivisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, int>> primes;
  Integer m = n;
  for (Integer p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      primes.emplace_back(p, e);
    }
  }
  if (m > 1) primes.emplace_back(m, 1);
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : primes) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Rational roots of a monic square-free polynomial, ascending, together with
// the (monic) cofactor that remains after dividing all of them out.
std::pair<std::vector<Rational>, Poly> rationalRoots(const Poly& s) {
  Poly rem = s;
  std::vector<Rational> roots;
  if (rem.isZero() || *rem.degree() == 0) return {roots, Poly::one()};
  // Clear denominators to an integer polynomial.
  Integer lcm = 1;
  for (const auto& c : rem.coeffs())
    lcm = boost::multiprecision::lcm(lcm, denominator(c));
  while (!rem.isZero() && *rem.degree() >= 1) {
    if (rem.coeff(0) == 0) {
      roots.push_back(Rational(0));
      rem = divmod(rem, Poly::variable()).first;
      continue;
    }
    std::vector<Rational> intCoeffs;
    Integer scale = 1;
    for (const auto& c : rem.coeffs())
      scale = boost::multiprecision::lcm(scale, denominator(c));
    Integer c0 = numerator(rem.coeff(0) * Rational(scale));
    Integer cd = numerator(rem.leadingCoeff() * Rational(scale));
    bool found = false;
    for (const Integer& p : positiveDivisors(c0)) {
      for (const Integer& q : positiveDivisors(cd)) {
        for (int sign : {1, -1}) {
          Rational cand = makeRational(sign * p, q);
          if (rem.eval(cand) == 0) {
            roots.push_back(cand);
            rem = divmod(rem, Poly::variable() - Poly::constant(cand)).first;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  std::sort(roots.begin(), roots.end());
  return {roots, rem.isZero() ? Poly::one() : rem.monic()};
}

}  // namespace

FactoredPoly factorOverRationals(const Poly& g) {
  if (g.isZero()) throw DomainError("factorization of the zero polynomial");
  FactoredPoly out;
  out.unit = g.leadingCoeff();
  Poly p = g.monic();
  if (*p.degree() == 0) return out;

  // Yun square-free decomposition: p = prod s_i^i with the s_i monic,
  // square-free and pairwise coprime.
  std::vector<std::pair<Poly, int>> squarefree;
  {
    Poly a = polyGcd(p, p.derivative());
    Poly b = divmod(p, a).first;
    Poly c = divmod(p.derivative(), a).first;
    Poly d = c - b.derivative();
    int i = 1;
    while (*b.degree() > 0) {
      Poly s = polyGcd(b, d);  // gcd(b, 0) == b handles the last block
      if (*s.degree() > 0) squarefree.emplace_back(s, i);
      b = divmod(b, s).first;
      if (*b.degree() == 0) break;
      c = divmod(d, s).first;
      d = c - b.derivative();
      ++i;
    }
  }

  std::vector<PolyFactor> factors;
  for (const auto& [s, mult] : squarefree) {
    auto [roots, residual] = rationalRoots(s);
    for (const Rational& r : roots)
      factors.push_back(
          {Poly::variable() - Poly::constant(r), mult, true});
    if (!residual.isZero() && *residual.degree() >= 1)
      factors.push_back({residual, mult, *residual.degree() <= 1});
  }
  // Deterministic order: by degree, then coefficients low-to-high.
  std::sort(factors.begin(), factors.end(),
            [](const PolyFactor& x, const PolyFactor& y) {
              const auto dx = *x.factor.degree(), dy = *y.factor.degree();
              if (dx != dy) return dx < dy;
              for (int k = 0; k <= dx; ++k) {
                if (x.factor.coeff(k) != y.factor.coeff(k))
                  return x.factor.coeff(k) < y.factor.coeff(k);
              }
              return x.multiplicity < y.multiplicity;
            });
  out.factors = std::move(factors);
  return out;
}

}  // namespace smith
