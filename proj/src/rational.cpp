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

#include "fairaudit/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fairaudit {
namespace {

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t narrow(u128 v, const char* what) {
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error(std::string("rational ") + what +
                              " exceeds 64-bit range after reduction");
  }
  return static_cast<std::uint64_t>(v);
}

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("malformed rational component '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("rational denominator must be positive");
  const std::uint64_t g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::operator+(const Rational& other) const {
  const u128 num = u128(num_) * other.den_ + u128(other.num_) * den_;
  const u128 den = u128(den_) * other.den_;
  const u128 g = gcd128(num == 0 ? den : num, den);
  Rational result;
  result.num_ = narrow(num / g, "numerator");
  result.den_ = narrow(den / g, "denominator");
  return result;
}

Rational Rational::operator*(const Rational& other) const {
  // Cross-reduce before multiplying to keep intermediates small.
  const std::uint64_t g1 = std::gcd(num_, other.den_);
  const std::uint64_t g2 = std::gcd(other.num_, den_);
  const u128 num = u128(num_ / g1) * (other.num_ / g2);
  const u128 den = u128(den_ / g2) * (other.den_ / g1);
  Rational result;
  result.num_ = narrow(num, "numerator");
  result.den_ = narrow(den, "denominator");
  return result;
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  const u128 lhs = u128(num_) * other.den_;
  const u128 rhs = u128(other.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_pretty_string() const {
  if (den_ == 1) return std::to_string(num_);
  return to_string();
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_u64(text), 1);
  }
  return Rational(parse_u64(text.substr(0, slash)), parse_u64(text.substr(slash + 1)));
}

}  // namespace fairaudit
