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

#ifndef SMITH_POLY_HPP
#define SMITH_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "smith/rational.hpp"

namespace smith {

/// Univariate polynomial over the rationals, dense coefficients indexed by
/// degree (low to high). The zero polynomial has an empty coefficient vector
/// and its degree is reported as std::nullopt, never as -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Poly zero() { return Poly(); }
  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly one() { return constant(Rational(1)); }
  /// The variable itself (x, printed as H or Omega depending on context).
  static Poly variable() { return Poly({Rational(0), Rational(1)}); }
  /// c * x^k
  static Poly monomial(const Rational& c, int k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool isZero() const { return coeffs_.empty(); }
  std::optional<int> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
  }
  /// Coefficient of x^k (zero when k exceeds the degree).
  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }
  Rational leadingCoeff() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
  }
  bool isMonic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Rational eval(const Rational& x) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

  Poly derivative() const;
  Poly pow(int n) const;
  /// Divides by the leading coefficient; domain error on the zero polynomial.
  Poly monic() const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

/// Quotient and remainder with deg r < deg b; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// True iff b divides a exactly.
bool divides(const Poly& b, const Poly& a);

/// p(x + k): the substitution that shifts the argument by a rational k.
Poly polyShift(const Poly& p, const Rational& k);

/// The unique u with u(x+1) - u(x) = 2 f(x) and u(0) = 0. For nonzero f,
/// deg u = deg f + 1.
Poly discreteAntiderivative(const Poly& f);

/// Monic gcd (gcd of two zero polynomials is a domain error).
Poly polyGcd(const Poly& a, const Poly& b);

struct ExtendedGcd {
  Poly g;  // monic
  Poly s;
  Poly t;  // g == s*a + t*b exactly
};

/// Extended Euclidean algorithm with minimal-degree Bezout cofactors.
ExtendedGcd extendedGcd(const Poly& a, const Poly& b);

struct PolyFactor {
  Poly factor;  // monic
  int multiplicity = 1;
  bool certifiedIrreducible = false;
};

/// unit * prod factor^multiplicity reproduces the input exactly; factors are
/// monic and pairwise coprime.
struct FactoredPoly {
  Rational unit;
  std::vector<PolyFactor> factors;

  Poly product() const;
};

/// Square-free decomposition followed by rational-root extraction. Linear
/// factors are certified irreducible; square-free residuals of degree >= 2
/// are returned uncertified.
FactoredPoly factorOverRationals(const Poly& g);

}  // namespace smith

#endif  // SMITH_POLY_HPP
