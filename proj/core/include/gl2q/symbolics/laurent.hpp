#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gl2q/symbolics/multipoly.hpp"

namespace gl2q::sym {

/// Laurent polynomial in the contraction parameter epsilon with MultiPoly
/// coefficients. Negative epsilon degrees are allowed; zero coefficients are
/// never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(MultiPoly constant);  // NOLINT(google-explicit-constructor)

  /// coefficient * eps^degree
  static LaurentPoly monomial(int degree, MultiPoly coefficient = MultiPoly(1));

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, MultiPoly>& coefficients() const { return coeffs_; }
  MultiPoly coefficient(int degree) const;
  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;

  /// Multiplies by eps^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  LaurentPoly pow(int exponent) const;
  /// Inverse for a single term whose coefficient is itself a unit.
  std::optional<LaurentPoly> unit_inverse() const;

  std::string to_string() const;

 private:
  void add(int degree, const MultiPoly& c);

  std::map<int, MultiPoly> coeffs_;
};

/// Result of epsilon -> 0 when some negative-degree coefficients survive.
struct DivergenceReport {
  std::vector<std::pair<int, MultiPoly>> terms;  // (degree < 0, coefficient)
  int worst_degree() const { return terms.empty() ? 0 : terms.front().first; }
};

/// Degree-0 coefficient when no negative degree is present, otherwise the
/// list of divergent terms.
std::variant<MultiPoly, DivergenceReport> laurent_limit(const LaurentPoly& x);

/// Substitutes symbols by Laurent polynomials. Symbols without a replacement
/// stay in the coefficients; negative powers need unit replacements.
LaurentPoly substitute(const MultiPoly& p, const std::map<Sym, LaurentPoly>& replacements);

}  // namespace gl2q::sym
