#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "gl2q/symbolics/rational.hpp"
#include "gl2q/symbolics/symbol.hpp"

namespace gl2q::sym {

/// Exponent vector over the global symbol table. Negative exponents are
/// allowed: the coefficient ring is the Laurent polynomial ring in the
/// parameters, which is what Table-1 style entries such as b+ a / a+ need.
using Monomial = std::array<std::int16_t, kSymbolCount>;

int total_degree(const Monomial& m);

/// Graded order, higher total degree first, then lexicographic with the
/// canonical symbol order. Used for both storage and printing.
struct MonomialOrder {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

/// Partial map from symbols to exact values.
class Assignment {
 public:
  Assignment() = default;
  Assignment& set(Sym s, Rational value);
  const std::optional<Rational>& get(Sym s) const { return values_[index_of(s)]; }
  bool has(Sym s) const { return values_[index_of(s)].has_value(); }

 private:
  std::array<std::optional<Rational>, kSymbolCount> values_{};
};

/// Multivariate (Laurent) polynomial over the rationals in the global symbols.
///
/// Terms with zero coefficients are never stored, so two polynomials are equal
/// exactly when their term maps are equal.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  MultiPoly() = default;
  MultiPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  template <typename Int, typename = std::enable_if_t<std::is_integral_v<Int>>>
  MultiPoly(Int constant) : MultiPoly(Rational(static_cast<long>(constant))) {}  // NOLINT

  static MultiPoly variable(Sym s, int power = 1);
  static MultiPoly term(Rational coefficient, const Monomial& monomial);

  /// Parses the canonical text form produced by to_string().
  static MultiPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> as_constant() const;
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  bool depends_on(Sym s) const;
  /// Largest total degree among the terms; zero polynomial has degree 0.
  int degree() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend MultiPoly operator*(const Rational& lhs, MultiPoly rhs) { return rhs *= lhs; }
  template <typename Int, typename = std::enable_if_t<std::is_integral_v<Int>>>
  friend MultiPoly operator*(Int lhs, MultiPoly rhs) { return rhs *= Rational(static_cast<long>(lhs)); }
  template <typename Int, typename = std::enable_if_t<std::is_integral_v<Int>>>
  friend MultiPoly operator*(MultiPoly lhs, Int rhs) { return lhs *= Rational(static_cast<long>(rhs)); }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) { return lhs.terms_ == rhs.terms_; }

  /// Power; negative exponents only for single-term (unit) polynomials.
  MultiPoly pow(int exponent) const;

  /// Inverse in the Laurent ring, available only for nonzero single-term polynomials.
  std::optional<MultiPoly> unit_inverse() const;

  /// Full evaluation. Throws std::invalid_argument for an unassigned symbol and
  /// std::domain_error for a zero value raised to a negative power.
  Rational evaluate(const Assignment& values) const;

  /// Substitutes the assigned symbols and keeps the others symbolic.
  MultiPoly partial_evaluate(const Assignment& values) const;

  /// Replaces a symbol by a polynomial. Negative powers of `s` require a unit replacement.
  MultiPoly substitute(Sym s, const MultiPoly& replacement) const;

  /// Returns k with *this == k * other, if such a rational exists and other is nonzero.
  std::optional<Rational> ratio_to(const MultiPoly& other) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Solves p = sum_i k_i * generators[i] over the rationals (exact Gaussian
/// elimination on the monomial coordinates). Returns the k_i, or nullopt when
/// p is outside the rational span.
std::optional<std::vector<Rational>> express_in_span(const MultiPoly& p, const std::vector<MultiPoly>& generators);

/// Set equality of two polynomial lists where elements are compared up to a
/// nonzero rational factor. Zero polynomials are ignored.
bool same_up_to_scalars(const std::vector<MultiPoly>& lhs, const std::vector<MultiPoly>& rhs);

/// Removes zero entries and entries proportional to an earlier entry.
std::vector<MultiPoly> dedupe_up_to_scalars(const std::vector<MultiPoly>& polys);

}  // namespace gl2q::sym
