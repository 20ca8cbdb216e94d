#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gl2q/symbolics/multipoly.hpp"

namespace gl2q::sym {

/// Group coordinates of GL(2) near the identity, in the order used by the
/// invariant vector fields.
enum class Coord : std::uint8_t { theta3, theta_plus, theta_minus, theta };

/// v^i w^j theta+^k theta-^l with v = e^(theta+theta3), w = e^(theta-theta3).
struct ExpKey {
  int v = 0;
  int w = 0;
  int tp = 0;
  int tm = 0;
  auto operator<=>(const ExpKey&) const = default;
};

/// Element of the ring Q[params][v, 1/v, w, 1/w, theta+, theta-]. Coefficients
/// are polynomials in the deformation parameters so that brackets built from
/// a symbolic r-matrix stay symbolic.
class ExpCoordExpr {
 public:
  ExpCoordExpr() = default;
  ExpCoordExpr(MultiPoly constant);  // NOLINT(google-explicit-constructor)

  static ExpCoordExpr term(MultiPoly coefficient, ExpKey key);
  static ExpCoordExpr v(int power = 1) { return term(MultiPoly(1), {power, 0, 0, 0}); }
  static ExpCoordExpr w(int power = 1) { return term(MultiPoly(1), {0, power, 0, 0}); }
  static ExpCoordExpr theta_plus(int power = 1) { return term(MultiPoly(1), {0, 0, power, 0}); }
  static ExpCoordExpr theta_minus(int power = 1) { return term(MultiPoly(1), {0, 0, 0, power}); }
  /// e^(-2 theta3) written as w / v.
  static ExpCoordExpr exp_minus_2theta3() { return term(MultiPoly(1), {-1, 1, 0, 0}); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<ExpKey, MultiPoly>& terms() const { return terms_; }

  ExpCoordExpr derive(Coord c) const;

  ExpCoordExpr& operator+=(const ExpCoordExpr& other);
  ExpCoordExpr& operator-=(const ExpCoordExpr& other);
  friend ExpCoordExpr operator+(ExpCoordExpr lhs, const ExpCoordExpr& rhs) { return lhs += rhs; }
  friend ExpCoordExpr operator-(ExpCoordExpr lhs, const ExpCoordExpr& rhs) { return lhs -= rhs; }
  friend ExpCoordExpr operator*(const ExpCoordExpr& lhs, const ExpCoordExpr& rhs);
  ExpCoordExpr operator-() const;
  friend bool operator==(const ExpCoordExpr& lhs, const ExpCoordExpr& rhs) { return lhs.terms_ == rhs.terms_; }

  /// Every distinct parameter polynomial multiplying a monomial in the
  /// coordinates. Zero exactly when the expression is zero.
  std::vector<MultiPoly> coefficients() const {
    std::vector<MultiPoly> out;
    for (const auto& [k, c] : terms_) out.push_back(c);
    return out;
  }

  /// Numeric value at the given coordinates and parameter assignment.
  double evaluate(double theta3, double theta_plus, double theta_minus, double theta,
                  const Assignment& params) const;

  std::string to_string() const;

 private:
  void add(const ExpKey& k, const MultiPoly& c);

  std::map<ExpKey, MultiPoly> terms_;
};

std::string_view coord_name(Coord c);

}  // namespace gl2q::sym
