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

#ifndef SMITH_RATIONAL_HPP
#define SMITH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace smith {

/// Thrown when an operation's preconditions are violated (division by zero,
/// non-monic annihilator, singular character where a nonsingular one is
/// required, and the like).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact arbitrary-precision integer.
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

/// Exact rational scalar. Always kept canonical: reduced to lowest terms,
/// positive denominator, zero represented as 0/1.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Rational makeRational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(num, den);
}

/// Prints "p" when the denominator is 1, otherwise "p/q".
std::string ratToString(const Rational& r);

/// Parses an integer or "p/q" literal, with optional leading '-'.
Rational parseRational(const std::string& text);

}  // namespace smith

#endif  // SMITH_RATIONAL_HPP
