// Copyright 2026 The Fairaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRAUDIT_RATIONAL_HPP_
#define FAIRAUDIT_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fairaudit {

// Exact non-negative fraction. All empirical probabilities and accuracies in
// this library are values of this type; equality and ordering are decided by
// 128-bit cross multiplication, never by floating point. With numerators and
// denominators bounded by the dataset size this never overflows in practice;
// arithmetic that would leave the uint64 range after reduction throws
// std::overflow_error instead of silently wrapping.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}

  // Reduces to lowest terms. Throws std::invalid_argument if den == 0.
  Rational(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }

  Rational operator+(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  Rational& operator+=(const Rational& other) { return *this = *this + other; }
  Rational& operator*=(const Rational& other) { return *this = *this * other; }

  // Values are kept reduced, so equality is member-wise.
  friend bool operator==(const Rational&, const Rational&) = default;
  std::strong_ordering operator<=>(const Rational& other) const;

  // Canonical "num/den" form, e.g. "2/3", "1/1".
  std::string to_string() const;
  // "2/3" for proper fractions, bare "1" or "0" for integers.
  std::string to_pretty_string() const;
  // Approximate value, for display only.
  double to_double() const;

  // Parses "num/den" or a bare integer. Throws std::invalid_argument on
  // malformed input or a zero denominator.
  static Rational parse(std::string_view text);

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

}  // namespace fairaudit

#endif  // FAIRAUDIT_RATIONAL_HPP_
