// Copyright 2026 The nashcell Authors.
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

#ifndef NASHCELL_SCALAR_H_
#define NASHCELL_SCALAR_H_

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <variant>

namespace nashcell {

enum class NumericMode { kRational, kFloat };

// Comparison tolerance used whenever a float operand is involved.
inline constexpr double kFloatTolerance = 1e-9;

std::string_view NumericModeName(NumericMode mode);

// A payoff or probability value: an exact GMP rational, or a double.
//
// Arithmetic between two rationals is exact. If either operand is a double the
// result is a double. Comparisons are exact between rationals and use
// kFloatTolerance otherwise, so in float mode `a == b` means |a - b| <= 1e-9.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) { Canonicalize(); }
  explicit Scalar(double d) : value_(d) {}

  static Scalar Integer(long v, NumericMode mode = NumericMode::kRational);
  static Scalar Ratio(long num, long den,
                      NumericMode mode = NumericMode::kRational);
  static Scalar Zero(NumericMode mode) { return Integer(0, mode); }
  static Scalar One(NumericMode mode) { return Integer(1, mode); }

  NumericMode mode() const {
    return is_rational() ? NumericMode::kRational : NumericMode::kFloat;
  }
  bool is_rational() const {
    return std::holds_alternative<mpq_class>(value_);
  }
  // Requires is_rational().
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  double ToDouble() const;
  // Converts to the requested mode. Float -> rational is exact in the binary
  // value of the double.
  Scalar As(NumericMode mode) const;

  // -1, 0 or +1; zero band of width kFloatTolerance for doubles.
  int Sign() const;
  bool IsZero() const { return Sign() == 0; }

  // "p/q" or "p" for rationals; shortest round-trip decimal for doubles.
  std::string ToString() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend int Compare(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return Compare(a, b) == 0;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    return Compare(a, b) <=> 0;
  }

  // Bitwise identity: same alternative and same stored value.
  bool Identical(const Scalar& o) const { return value_ == o.value_; }

 private:
  void Canonicalize();

  std::variant<mpq_class, double> value_;
};

Scalar Max(const Scalar& a, const Scalar& b);
Scalar Min(const Scalar& a, const Scalar& b);
Scalar Abs(const Scalar& a);

// Parses an integer ("-3"), a decimal ("0.25") or a ratio ("2/3"). In float
// mode any strtod-compatible literal is accepted as well. Throws NashError
// with kParseError on malformed text and kValueError on a zero denominator.
Scalar ParseScalar(std::string_view text, NumericMode mode);

}  // namespace nashcell

#endif  // NASHCELL_SCALAR_H_
