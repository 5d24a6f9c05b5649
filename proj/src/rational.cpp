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

#include "govgame/rational.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "govgame/error.hpp"

namespace govgame {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Decimal digits to an integer. cpp_int treats a leading 0 as an octal prefix.
BigInt decimal_digits(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt{std::string(digits)};
}

// [+-]digits
BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ValidationError("invalid rational literal '" + std::string(whole) + "'");
  }
  BigInt v = decimal_digits(s);
  if (negative) v = -v;
  return v;
}

BigInt pow10(long exponent) {
  BigInt r = 1;
  for (long i = 0; i < exponent; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  const auto bad = [&] {
    return ValidationError("invalid rational literal '" + std::string(whole) + "'");
  };
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    const auto [ptr, ec] =
        std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size() || exp_text.empty() ||
        std::labs(exponent) > 4096) {
      throw bad();
    }
  }
  std::string digits;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw bad();
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw bad();
    digits = std::string(s);
  }
  BigInt mantissa = decimal_digits(digits);
  if (negative) mantissa = -mantissa;
  return exponent >= 0 ? Rational(mantissa * pow10(exponent))
                       : Rational(mantissa, pow10(-exponent));
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw ValidationError("denominator must be positive");
  if (denominator < 0) {
    value_ = Value(BigInt(-numerator), BigInt(-denominator));
  } else {
    value_ = Value(numerator, denominator);
  }
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ValidationError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ValidationError("empty rational literal");
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = trim(s.substr(slash + 1));
    const BigInt n = parse_integer(num, text);
    const BigInt d = parse_integer(den, text);
    if (d <= 0) throw ValidationError("denominator must be positive");
    return Rational(n, d);
  }
  if (s.find_first_of(".eE") != std::string_view::npos) return parse_decimal(s, text);
  return Rational(parse_integer(s, text));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw ValidationError("non-finite number");
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw ValidationError("unrepresentable number");
  return parse(std::string_view(buf.data(), static_cast<std::size_t>(ptr - buf.data())));
}

std::string Rational::to_string() const {
  const BigInt d = denominator();
  if (d == 1) return numerator().str();
  return numerator().str() + "/" + d.str();
}

std::string to_decimal_string(const Rational& x, int digits) {
  // Round half away from zero at `digits` places, computed exactly.
  const BigInt scale = pow10(digits);
  const BigInt num = abs(x).numerator() * scale;
  const BigInt den = x.denominator();
  BigInt q = num / den;
  if ((num % den) * 2 >= den) q += 1;
  const BigInt whole = q / scale;
  const BigInt rest = q % scale;
  std::string int_part = whole.str();
  std::string frac = rest.str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  std::string out = (x.sign() < 0 && q != 0) ? "-" : "";
  out += int_part;
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace govgame
