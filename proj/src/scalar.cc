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

#include "nashcell/scalar.h"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

#include "nashcell/errors.h"

namespace nashcell {
namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void Malformed(std::string_view text) {
  throw NashError(ErrorCode::kParseError,
                  "malformed number \"" + std::string(text) + "\"");
}

// Exact parse of [-+]digits[.digits] or [-+]digits/digits.
mpq_class ParseExact(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!IsDigits(num) || !IsDigits(den)) Malformed(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
      throw NashError(ErrorCode::kValueError,
                      "zero denominator in \"" + std::string(text) + "\"");
    }
    q = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) Malformed(text);
    if (!whole.empty() && !IsDigits(whole)) Malformed(text);
    if (!frac.empty() && !IsDigits(frac)) Malformed(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(
        std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    q = mpq_class(digits, scale);
  } else {
    if (!IsDigits(s)) Malformed(text);
    q = mpq_class(mpz_class(std::string(s), 10));
  }
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace

std::string_view NumericModeName(NumericMode mode) {
  return mode == NumericMode::kRational ? "rational" : "float";
}

Scalar Scalar::Integer(long v, NumericMode mode) {
  if (mode == NumericMode::kFloat) return Scalar(static_cast<double>(v));
  return Scalar(mpq_class(v));
}

Scalar Scalar::Ratio(long num, long den, NumericMode mode) {
  if (den == 0) throw NashError(ErrorCode::kValueError, "zero denominator");
  if (mode == NumericMode::kFloat) {
    return Scalar(static_cast<double>(num) / static_cast<double>(den));
  }
  return Scalar(mpq_class(num, den));
}

void Scalar::Canonicalize() { std::get<mpq_class>(value_).canonicalize(); }

double Scalar::ToDouble() const {
  if (is_rational()) return rational().get_d();
  return std::get<double>(value_);
}

Scalar Scalar::As(NumericMode mode) const {
  if (mode == this->mode()) return *this;
  if (mode == NumericMode::kFloat) return Scalar(ToDouble());
  return Scalar(mpq_class(std::get<double>(value_)));
}

int Scalar::Sign() const {
  if (is_rational()) return sgn(rational());
  double d = std::get<double>(value_);
  if (std::abs(d) <= kFloatTolerance) return 0;
  return d > 0 ? 1 : -1;
}

std::string Scalar::ToString() const {
  if (is_rational()) return rational().get_str();
  std::array<char, 64> buf;
  auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), ToDouble());
  return std::string(buf.data(), end);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<mpq_class>(value_) += o.rational();
  } else {
    value_ = ToDouble() + o.ToDouble();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<mpq_class>(value_) -= o.rational();
  } else {
    value_ = ToDouble() - o.ToDouble();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<mpq_class>(value_) *= o.rational();
  } else {
    value_ = ToDouble() * o.ToDouble();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    if (sgn(o.rational()) == 0) {
      throw NashError(ErrorCode::kValueError, "division by zero");
    }
    std::get<mpq_class>(value_) /= o.rational();
  } else {
    value_ = ToDouble() / o.ToDouble();
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-rational()));
  return Scalar(-std::get<double>(value_));
}

int Compare(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) {
    int c = cmp(a.rational(), b.rational());
    return (c > 0) - (c < 0);
  }
  double diff = a.ToDouble() - b.ToDouble();
  if (std::abs(diff) <= kFloatTolerance) return 0;
  return diff < 0 ? -1 : 1;
}

Scalar Max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
Scalar Min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar Abs(const Scalar& a) { return a.Sign() < 0 ? -a : a; }

Scalar ParseScalar(std::string_view text, NumericMode mode) {
  std::string_view s = Trim(text);
  if (s.empty()) Malformed(text);
  if (mode == NumericMode::kRational) return Scalar(ParseExact(s));
  // Ratios keep their exact quotient before rounding.
  if (s.find('/') != std::string_view::npos) {
    return Scalar(ParseExact(s).get_d());
  }
  std::string owned(s);
  char* end = nullptr;
  double d = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size() || !std::isfinite(d)) {
    Malformed(text);
  }
  return Scalar(d);
}

}  // namespace nashcell
