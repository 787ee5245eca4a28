// Copyright 2026 The Scoreplay Authors
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

#ifndef SCOREPLAY_SCORE_HPP_
#define SCOREPLAY_SCORE_HPP_

#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "scoreplay/errors.hpp"

namespace scoreplay {

// Exact rational score: Left's points minus Right's points.
//
// Always in lowest terms with a positive denominator (the backing
// cpp_rational normalizes on every operation).
class Score {
 public:
  using Rational = boost::multiprecision::cpp_rational;
  using Integer = boost::multiprecision::cpp_int;

  Score() = default;
  Score(long long value) : value_(value) {}  // NOLINT: implicit by design
  Score(long long numerator, long long denominator)
      : value_(Rational(Integer(numerator), Integer(denominator))) {}
  explicit Score(Rational value) : value_(std::move(value)) {}

  // Parses a complete rational literal: integer, "a/b", or terminating
  // decimal "d.ddd".
  static Score parse(std::string_view text);

  // Consumes a rational literal starting at text[pos]; advances pos.
  static Score parse_prefix(std::string_view text, std::size_t& pos);

  const Rational& value() const { return value_; }
  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }

  std::string str() const { return value_.str(); }
  std::size_t hash() const { return boost::multiprecision::hash_value(value_); }

  Score operator-() const { return Score(Rational(-value_)); }
  Score& operator+=(const Score& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Score& operator-=(const Score& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Score& operator*=(const Score& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  friend Score operator+(Score lhs, const Score& rhs) { return lhs += rhs; }
  friend Score operator-(Score lhs, const Score& rhs) { return lhs -= rhs; }
  friend Score operator*(Score lhs, const Score& rhs) { return lhs *= rhs; }

  friend bool operator==(const Score& a, const Score& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Score& a, const Score& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Score& s) {
    return os << s.str();
  }

 private:
  Rational value_;
};

inline Score Score::parse_prefix(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  auto digits = [&](std::size_t& p) {
    const std::size_t from = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
      ++p;
    return text.substr(from, p - from);
  };
  // Built digit by digit: the string constructor of cpp_int would read a
  // leading 0 as an octal prefix.
  auto decimal = [](std::string_view d) {
    Integer v(0);
    for (char c : d) v = v * 10 + (c - '0');
    return v;
  };

  std::size_t p = pos;
  bool negative = false;
  if (p < text.size() && (text[p] == '-' || text[p] == '+')) {
    negative = text[p] == '-';
    ++p;
  }
  std::string_view whole = digits(p);
  if (whole.empty()) throw ParseError("expected a number", p);

  Integer num = decimal(whole);
  Integer den(1);
  if (p < text.size() && text[p] == '/') {
    ++p;
    std::string_view d = digits(p);
    if (d.empty()) throw ParseError("expected a denominator", p);
    den = decimal(d);
    if (den == 0) throw ParseError("zero denominator", start);
  } else if (p < text.size() && text[p] == '.') {
    ++p;
    std::string_view frac = digits(p);
    if (p < text.size() && (text[p] == '(' || text[p] == '.')) {
      // "0.(3)" and "0.333..." both denote repeating expansions.
      throw ParseError("non-terminating decimal", start);
    }
    if (frac.empty()) throw ParseError("expected decimal digits", p);
    den = boost::multiprecision::pow(Integer(10),
                                     static_cast<unsigned>(frac.size()));
    num = num * den + decimal(frac);
  }
  if (negative) num = -num;
  pos = p;
  return Score(Rational(num, den));
}

inline Score Score::parse(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
  Score s = parse_prefix(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return s;
}

}  // namespace scoreplay

template <>
struct std::hash<scoreplay::Score> {
  std::size_t operator()(const scoreplay::Score& s) const { return s.hash(); }
};

#endif  // SCOREPLAY_SCORE_HPP_
