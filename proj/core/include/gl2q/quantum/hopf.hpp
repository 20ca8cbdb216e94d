#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gl2q/quantum/expr.hpp"
#include "gl2q/quantum/representation.hpp"

namespace gl2q::quantum {

/// coefficient * left (x) right
struct CoproductTerm {
  Complex coefficient{1.0, 0.0};
  Expr left;
  Expr right;
};

/// Delta of each generator as a finite sum of tensor products of expressions.
struct CoproductRule {
  std::string name;
  std::array<std::string, 4> labels{"J3", "J+", "J-", "I"};
  std::array<std::vector<CoproductTerm>, 4> images;
  /// Generators declared primitive (Delta X = 1 (x) X + X (x) 1).
  std::array<bool, 4> primitive{false, false, false, false};
};

struct Relation {
  std::string name;
  Expr lhs;
  Expr rhs;
};

enum class QuantizationKind { undeformed, standard_Ia, jordanian, twisted_xxz, twisted_xxx };

std::string quantization_name(QuantizationKind kind);
std::optional<QuantizationKind> parse_quantization(const std::string& name);

struct Quantization {
  QuantizationKind kind = QuantizationKind::undeformed;
  std::map<std::string, double> params;
  CoproductRule coproduct;
  std::vector<Relation> relations;
  Expr casimir;
};

Quantization undeformed_quantization();
/// Standard deformation (family I, standard), generators (J3', J+, J-, I). a != 0.
Quantization quantization_Ia(double a_plus, double a);
/// Two-parameter Jordanian deformation (family I, non-standard). a_plus != 0.
Quantization quantization_jordanian(double a_plus, double b_plus);
/// Twisted XXZ algebra (family II, standard with b+ = b- = 0).
Quantization quantization_xxz(double a, double b);
/// Family II non-standard at b- = 0: undeformed relations, closed-form coproduct.
Quantization quantization_twisted(double b_plus, double b);

/// Family II non-standard coproduct with Delta(X_i) = 1 (x) X_i + sum_j X_j (x) E_ij(I),
/// E the exponential of a 3x3 matrix linear in I. Needs scalar I.
CoproductRule lm_rule(double b_plus, double b_minus, double b);

/// The representation a quantization is usually checked in.
Representation default_rep(const Quantization& q);

using GeneratorImages = std::array<CMatrix, 4>;

GeneratorImages coproduct_eval(const CoproductRule& rule, const Representation& rep);
/// Delta evaluated with independent bindings for the two tensor factors.
GeneratorImages coproduct_eval(const CoproductRule& rule, const DenseBinding& left, const DenseBinding& right);
GeneratorImages lm_coproduct(double b_plus, double b_minus, double b, const Representation& rep);

/// max over relations of |lhs - rhs| (entrywise) in the given binding.
double relations_residual(const std::vector<Relation>& relations, const DenseBinding& binding);
double homomorphism_check(const CoproductRule& rule, const Representation& rep, const std::vector<Relation>& relations);

enum class CoassociativityMethod { rep3, primitive_scalar };

double coassociativity_rep3(const CoproductRule& rule, const Representation& rep);
/// Replaces primitive generators by sampled scalars in each tensor slot and
/// compares the two iterated coproducts coefficient by coefficient over the
/// non-primitive labels. Throws std::domain_error when the rule has a
/// non-primitive generator to the right of a primitive-dependent factor.
double coassociativity_primitive_scalar(const CoproductRule& rule, int samples = 20, std::uint64_t seed = 1);

}  // namespace gl2q::quantum
