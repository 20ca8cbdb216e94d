#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gl2q/symbolics/rational.hpp"

namespace gl2q::lie {

using sym::Rational;

enum class AlgebraName { gl2, h4 };

inline constexpr int kDim = 4;

/// Four-dimensional Lie algebra given by rational structure constants
/// [X_i, X_j] = sum_k f(i,j)[k] X_k.
class LieAlgebra {
 public:
  using Row = std::array<Rational, kDim>;

  /// [J3,J+]=2J+, [J3,J-]=-2J-, [J+,J-]=J3, I central.
  static const LieAlgebra& gl2();
  /// [N,A+]=A+, [N,A-]=-A-, [A-,A+]=M, M central.
  static const LieAlgebra& h4();
  static const LieAlgebra& get(AlgebraName name) { return name == AlgebraName::gl2 ? gl2() : h4(); }

  AlgebraName name() const { return name_; }
  std::string_view label() const { return name_ == AlgebraName::gl2 ? "gl2" : "h4"; }
  const std::array<std::string, kDim>& basis() const { return labels_; }
  std::string_view basis_label(int i) const { return labels_.at(i); }

  /// Accepts the basis labels, plus "J0"/"Jp"/"Jm"-style ASCII spellings.
  std::optional<int> index_of(std::string_view label) const;
  /// Like index_of but throws std::invalid_argument on an unknown label.
  int require_index(std::string_view label) const;

  const Row& structure(int i, int j) const { return table_.at(i).at(j); }

  /// Exact Jacobi identity over all basis triples.
  bool satisfies_jacobi() const;

 private:
  LieAlgebra(AlgebraName name, std::array<std::string, kDim> labels);
  void set_bracket(int i, int j, Row value);

  AlgebraName name_;
  std::array<std::string, kDim> labels_;
  std::array<std::array<Row, kDim>, kDim> table_{};
};

/// Basis indices of gl(2).
namespace gl2 {
inline constexpr int J3 = 0;
inline constexpr int Jp = 1;
inline constexpr int Jm = 2;
inline constexpr int I = 3;
}  // namespace gl2

/// Basis indices of h4.
namespace h4 {
inline constexpr int N = 0;
inline constexpr int Ap = 1;
inline constexpr int Am = 2;
inline constexpr int M = 3;
}  // namespace h4

/// Word in the generators with a rational weight, e.g. 2*J+J-.
struct CasimirTerm {
  Rational coefficient;
  std::vector<int> word;
};

/// Quadratic element of the universal enveloping algebra kept as an ordered
/// list of noncommutative monomials.
struct CasimirSpec {
  AlgebraName algebra = AlgebraName::gl2;
  std::vector<CasimirTerm> terms;

  /// J3^2 + 2 J+J- + 2 J-J+.
  static CasimirSpec gl2_quadratic();
};

}  // namespace gl2q::lie
