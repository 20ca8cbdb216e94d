#include "gl2q/symbolics/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace gl2q::sym {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("cannot parse rational '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) {
    throw std::invalid_argument("cannot parse empty rational");
  }

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw std::invalid_argument("cannot parse rational '" + std::string(text) + "'");
    }
    mpz_class den(std::string(den_text), 10);
    if (den == 0) {
      throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
    }
    return Rational(mpq_class(num, den));
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw std::invalid_argument("cannot parse rational '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    if (negative) num = -num;
    return Rational(mpq_class(num, den));
  }

  return Rational(mpq_class(parse_integer(text, text)));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace gl2q::sym
