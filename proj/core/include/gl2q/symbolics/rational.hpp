#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gl2q::sym {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator, so structural
/// equality is value equality. The canonical text form is "p/q", or just "p"
/// when the denominator is one.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Parses "p", "p/q", "-p/q" or a finite decimal such as "0.25" (exactly 1/4).
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational pow(int exponent) const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace gl2q::sym
