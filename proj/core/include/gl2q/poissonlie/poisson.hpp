#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "gl2q/bialgebra/param_point.hpp"
#include "gl2q/liealg/tensor.hpp"
#include "gl2q/symbolics/expcoord.hpp"

namespace gl2q::poisson {

using sym::Coord;
using sym::ExpCoordExpr;
using sym::MultiPoly;

inline constexpr int kCoords = 4;

/// Components along d/d theta3, d/d theta+, d/d theta-, d/d theta.
struct VectorField {
  std::array<ExpCoordExpr, kCoords> component;

  ExpCoordExpr apply(const ExpCoordExpr& f) const;
  bool is_zero() const;
  friend bool operator==(const VectorField&, const VectorField&) = default;
};

/// [X, Y] as a vector field.
VectorField commutator(const VectorField& x, const VectorField& y);

struct InvariantFields {
  std::array<VectorField, lie::kDim> left;   // indexed by gl(2) generator
  std::array<VectorField, lie::kDim> right;
};

/// Left and right invariant fields for T = e^{theta- J-} e^{theta I} e^{theta3 J3} e^{theta+ J+}.
const InvariantFields& invariant_fields();

enum class Chart { coordinates, entries };

/// Antisymmetric table of brackets between the four chart functions. The
/// coordinate chart is ordered theta3, theta+, theta-, theta; the entry chart
/// A, B, C, D.
struct PoissonTable {
  Chart chart = Chart::coordinates;
  std::array<std::array<ExpCoordExpr, kCoords>, kCoords> bracket;

  static std::string_view label(Chart chart, int i);
  bool is_antisymmetric() const;
  bool is_zero() const;
};

/// Sklyanin bracket sum r^{ij} (X_i^L (x) X_j^L - X_i^R (x) X_j^R) on the coordinates.
PoissonTable sklyanin_table(const lie::Tensor& r);

/// {f, g} from a coordinate table by the chain rule. Neither argument may
/// depend on theta3 or theta outside v and w, which the ring guarantees.
ExpCoordExpr poisson_bracket(const PoissonTable& coords, const ExpCoordExpr& f, const ExpCoordExpr& g);

/// {theta_a, F} for a coordinate theta_a.
ExpCoordExpr coordinate_bracket(const PoissonTable& coords, int a, const ExpCoordExpr& f);

struct JacobiReport {
  /// {x_a,{x_b,x_c}} + cyclic for a < b < c.
  std::vector<std::pair<std::array<int, 3>, ExpCoordExpr>> cyclic_sums;
  /// Distinct coefficient polynomials of the cyclic sums, up to rational factors.
  std::vector<MultiPoly> obstructions;
  bool vanishes() const { return obstructions.empty(); }
};

JacobiReport poisson_jacobi(const PoissonTable& coords);

/// Entries of T as functions: A = v, B = v theta+, C = v theta-, D = v theta+ theta- + w.
std::array<ExpCoordExpr, 4> group_entries();

/// Brackets among A, B, C, D computed by the Leibniz rule from a coordinate table.
PoissonTable entry_brackets(const PoissonTable& coords);

struct KupershmidtParams {
  sym::Rational r, s, u, v, w;
  friend bool operator==(const KupershmidtParams&, const KupershmidtParams&) = default;
};

struct NotEmbeddable {
  sym::Rational a_minus, b_minus;
};

/// Parameters of the quadratic GL(2) brackets in Kupershmidt's list; only
/// points with a- = b- have a counterpart.
std::variant<KupershmidtParams, NotEmbeddable> kupershmidt_map(const bialg::ParamPoint& pt);

}  // namespace gl2q::poisson
