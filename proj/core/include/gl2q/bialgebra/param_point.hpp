#pragma once

#include <array>
#include <string>

#include "gl2q/symbolics/multipoly.hpp"

namespace gl2q::bialg {

using sym::Rational;
using sym::Sym;

/// Exact values of (a+, a-, b+, b-, a, b).
class ParamPoint {
 public:
  ParamPoint() = default;
  ParamPoint(Rational a_plus, Rational a_minus, Rational b_plus, Rational b_minus, Rational a, Rational b)
      : values_{std::move(a_plus), std::move(a_minus), std::move(b_plus), std::move(b_minus), std::move(a),
                std::move(b)} {}

  /// Only the six deformation parameters are valid keys.
  const Rational& get(Sym s) const;
  ParamPoint& set(Sym s, Rational value);

  const Rational& a_plus() const { return values_[0]; }
  const Rational& a_minus() const { return values_[1]; }
  const Rational& b_plus() const { return values_[2]; }
  const Rational& b_minus() const { return values_[3]; }
  const Rational& a() const { return values_[4]; }
  const Rational& b() const { return values_[5]; }

  /// a^2 + a+ a-, nonzero exactly for standard bialgebras.
  Rational discriminant() const { return a() * a() + a_plus() * a_minus(); }

  sym::Assignment assignment() const;
  std::string to_string() const;

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;

 private:
  std::array<Rational, 6> values_{};
};

}  // namespace gl2q::bialg
