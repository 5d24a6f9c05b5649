// Copyright 2026 The govgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GOVGAME_RATIONAL_HPP_
#define GOVGAME_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace govgame {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}  // NOLINT: implicit by design of a numeric type
  Rational(long value) : value_(value) {}  // NOLINT
  Rational(long long value) : value_(value) {}  // NOLINT
  Rational(const BigInt& value) : value_(value) {}  // NOLINT

  // Throws ValidationError if `denominator` is zero. A negative denominator
  // moves its sign to the numerator.
  Rational(const BigInt& numerator, const BigInt& denominator);

  // Accepts "p/q", integers and decimal literals (optionally with exponent).
  // Decimals are converted to the exact value they denote: "0.54" is 27/50.
  static Rational parse(std::string_view text);

  // The exact rational value of a finite double, via its shortest
  // round-trip decimal representation (so 0.7 becomes 7/10).
  static Rational from_double(double value);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }

  double to_double() const { return value_.convert_to<double>(); }

  // "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  // Throws ValidationError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) {
    Rational r;
    r.value_ = -x.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.to_string();
  }

 private:
  using Value = boost::multiprecision::number<
      boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
      boost::multiprecision::et_off>;
  Value value_{0};
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

// Decimal approximation with a fixed number of digits after the point.
std::string to_decimal_string(const Rational& x, int digits = 6);

}  // namespace govgame

namespace Eigen {

template <>
struct NumTraits<govgame::Rational> : GenericNumTraits<govgame::Rational> {
  using Real = govgame::Rational;
  using NonInteger = govgame::Rational;
  using Literal = govgame::Rational;
  using Nested = govgame::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 60
  };

  // Exact arithmetic: no rounding threshold anywhere.
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // GOVGAME_RATIONAL_HPP_
