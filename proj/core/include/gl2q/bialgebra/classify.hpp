#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gl2q/bialgebra/rmatrix.hpp"

namespace gl2q::bialg {

enum class Family { I_plus, I_minus, II };

std::string_view family_name(Family f);

struct FamilyTag {
  Family family = Family::II;
  bool standard = false;
  Rational discriminant;  // a^2 + a+ a-
  /// Set for I- points: the gl(2) automorphism maps them into I+ form.
  bool equivalent_to_I_plus = false;

  std::string type_name() const { return standard ? "standard" : "non-standard"; }
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

struct NotABialgebra {
  /// (constraint in canonical text, its nonzero value at the point)
  std::vector<std::pair<std::string, Rational>> violated;
};

/// Checks the co-Jacobi constraints and sorts a valid point into I+, I- or II.
std::variant<FamilyTag, NotABialgebra> classify(const ParamPoint& pt);

/// J+ <-> J-, J3 -> -J3, I -> I on generators and the induced map on the
/// parameters. Each overload is an involution.
ParamPoint apply_automorphism(const ParamPoint& pt);
Tensor apply_automorphism(const Tensor& t);
Cocommutator apply_automorphism(const Cocommutator& delta);
/// Induced map on polynomials in the deformation parameters.
MultiPoly apply_automorphism(const MultiPoly& p);

}  // namespace gl2q::bialg
